//! Oracle query costs on representative hosts: a mid-size vertex search,
//! an edge search, and an Infinite certification by exhaustion.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use extraconn_core::{
    edge_corona, g_extra_edge_connectivity, g_extra_vertex_connectivity, subdivision_edge_nc,
    Graph, SearchBudget,
};

fn bench_oracle(c: &mut Criterion) {
    let budget = SearchBudget::default();

    let se_nc = subdivision_edge_nc(&Graph::cycle(4), &Graph::complete(2));
    c.bench_function("oracle/kappa_1 on C4 se-nc K2 (16 vertices)", |b| {
        b.iter(|| {
            g_extra_vertex_connectivity(black_box(&se_nc), black_box(1), &budget).unwrap().0
        })
    });

    let corona = edge_corona(&Graph::cycle(4), &Graph::complete(2));
    c.bench_function("oracle/lambda_2 on C4 edge-corona K2 (24 edges)", |b| {
        b.iter(|| g_extra_edge_connectivity(black_box(&corona), black_box(2), &budget).unwrap().0)
    });

    let star = Graph::star(5);
    c.bench_function("oracle/kappa_1 infinite certification on K1,5", |b| {
        b.iter(|| g_extra_vertex_connectivity(black_box(&star), black_box(1), &budget).unwrap().0)
    });
}

criterion_group!(oracle, bench_oracle);
criterion_main!(oracle);
