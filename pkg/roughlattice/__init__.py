"""Rough set lattices of finite quasiorders."""
from roughlattice.approx import ApproxContext, RoughSet, lower, lower_inv, rough_pair, upper, upper_inv
from roughlattice.errors import RoughLatticeError
from roughlattice.lattice import RsLattice, enumerate_rs, join_family, meet_family, witness_join, witness_meet
from roughlattice.relation import Relation, SubsetMask, Universe

__all__ = [
    "ApproxContext",
    "Relation",
    "RoughLatticeError",
    "RoughSet",
    "RsLattice",
    "SubsetMask",
    "Universe",
    "enumerate_rs",
    "join_family",
    "lower",
    "lower_inv",
    "meet_family",
    "rough_pair",
    "upper",
    "upper_inv",
    "witness_join",
    "witness_meet",
]
