from ._pmut import (
    chain_polytope,
    faces,
    hull,
    mutation_graph,
    order_polytope,
    polytope,
    transfer_point,
    trip_permutation,
    valuations,
    verify,
)

__all__ = [
    "chain_polytope",
    "faces",
    "hull",
    "mutation_graph",
    "order_polytope",
    "polytope",
    "transfer_point",
    "trip_permutation",
    "valuations",
    "verify",
]
