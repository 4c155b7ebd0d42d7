"""Exact arithmetic for Jack symmetric functions, the quantum Lax operator
on the extended Fock module, and Jack(-Lax) Littlewood-Richardson
coefficients, with a verification CLI."""

__version__ = "0.1.0"
