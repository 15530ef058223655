"""Exact verification of exterior-power multiplicities in Springer representations
of classical Weyl groups: root data, invariants, characters, tableaux and
nilpotent orbits, with a batch command line front end."""

__version__ = "0.1.0"
