"""IMLL proofs, their compilation to morphism terms, and evaluation in models."""
from .compile import compile_proof, compile_with_sequent
from .proofs import check_proof
from .semantics import Environment, dom_cod_check, evaluate_term, interpret_context, interpret_formula
from .syntax import (ONE, Atom, Lolli, One, ProofTree, Sequent, Tensor, atoms_of, parse_formula,
                     parse_proof)
from .terms import coherence_iso, context_shape, sexpr, typing

__all__ = [
    "Atom", "One", "ONE", "Tensor", "Lolli", "Sequent", "ProofTree", "parse_formula", "parse_proof",
    "atoms_of", "check_proof", "compile_proof", "compile_with_sequent", "coherence_iso",
    "context_shape", "typing", "sexpr", "Environment", "interpret_formula", "interpret_context",
    "evaluate_term", "dom_cod_check",
]
