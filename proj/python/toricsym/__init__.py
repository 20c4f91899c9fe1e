from ._core import (
    ParseError,
    Polynomial,
    default_degree_bound,
    enumerate_fiber,
    family,
    in_power,
    in_toric_ideal,
    kernel_basis,
    lattice_binomials,
    lattice_kernel,
    moment_matrix,
    nz_member,
    parse_matrix,
    run_cli,
    saturation_witness,
    symbolic_component,
    symbolic_generators,
    toric_generators,
)

__all__ = [
    "ParseError",
    "Polynomial",
    "default_degree_bound",
    "enumerate_fiber",
    "family",
    "in_power",
    "in_toric_ideal",
    "kernel_basis",
    "lattice_binomials",
    "lattice_kernel",
    "moment_matrix",
    "nz_member",
    "parse_matrix",
    "run_cli",
    "saturation_witness",
    "symbolic_component",
    "symbolic_generators",
    "toric_generators",
]
