"""Genetic algorithm operators and engine for the symmetric TSP."""

from ._core import (
    Instance,
    ParseError,
    brute_force_optimal,
    collision_velocities,
    crossover,
    crossover_names,
    is_valid_tour,
    known_optimum,
    load_tsplib,
    mutate,
    mutation_names,
    preset_names,
    random_instance,
    run,
    tour_cost,
    worst_gene_left,
    worst_gene_lr,
)

__all__ = [
    "Instance",
    "ParseError",
    "brute_force_optimal",
    "collision_velocities",
    "crossover",
    "crossover_names",
    "is_valid_tour",
    "known_optimum",
    "load_tsplib",
    "mutate",
    "mutation_names",
    "preset_names",
    "random_instance",
    "run",
    "tour_cost",
    "worst_gene_left",
    "worst_gene_lr",
]
