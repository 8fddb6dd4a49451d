"""Grid orchestration for exactness certificates.

Runs the two sequence verifications over a grid of (m, n, field) cells,
isolating failures and size-cap refusals per cell, and performs the
degree-2 agreement checks tying the two quotient constructions to the
classical wedge -> tensor -> symmetric sequence.  Cells are pure and
independent; results are always reported in canonical (m, n, field,
sequence) order regardless of how they were computed.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

from . import bimodule, evensym, exterior, tensor
from .certificates import Certificate, CheckResult
from .errors import SizeCapError
from .fields import Field

DEFAULT_SIZE_CAP = bimodule.DEFAULT_SIZE_CAP

SEQUENCES = {
    "m": ("M->T->S",),
    "sprime": ("Lambda->S'->S",),
    "both": ("M->T->S", "Lambda->S'->S"),
}


@dataclass(frozen=True)
class CheckGrid:
    """A rectangular grid of verification cells."""

    m_values: tuple[int, ...]
    n_values: tuple[int, ...]
    fields: tuple[Field, ...]
    size_cap: int = DEFAULT_SIZE_CAP

    def __post_init__(self):
        if not self.m_values or not self.n_values or not self.fields:
            raise ValueError("grid axes must be nonempty")
        if any(m < 0 for m in self.m_values):
            raise ValueError("m values must be >= 0")
        if any(n < 2 for n in self.n_values):
            raise ValueError("sequence checks need degree >= 2")


def _field_key(f: Field) -> tuple:
    return (f.char, f.name)


def _verify_cell(m: int, n: int, field: Field, sequence: str, size_cap: int) -> Certificate:
    space = tensor.Space(m, field)
    try:
        if sequence == "M->T->S":
            return bimodule.verify_sequence(space, n, size_cap)
        return evensym.verify_sequence(space, n, size_cap)
    except SizeCapError as e:
        return Certificate(
            sequence=sequence, m=m, n=n, field_name=field.name,
            dims={}, checks=(), error=f"size_cap: {e}")


def run_grid(grid: CheckGrid, which: str = "both", workers: int = 1) -> list[Certificate]:
    """One certificate per (m, n, field, sequence), canonically ordered.

    A size-cap refusal in one cell is reported in that cell's
    certificate and never aborts the rest of the grid.
    """
    if which not in SEQUENCES:
        raise ValueError(f"unknown selection {which!r}; expected m, sprime, or both")
    jobs = [
        (m, n, field, seq)
        for m in sorted(set(grid.m_values))
        for n in sorted(set(grid.n_values))
        for field in sorted(set(grid.fields), key=_field_key)
        for seq in SEQUENCES[which]
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            certs = list(pool.map(
                lambda job: _verify_cell(*job[:3], job[3], grid.size_cap), jobs))
    else:
        certs = [_verify_cell(m, n, f, seq, grid.size_cap) for m, n, f, seq in jobs]
    certs.sort(key=lambda c: (c.m, c.n, c.field_name, c.sequence))
    return certs


def verify_degree2_agreement(space: tensor.Space) -> Certificate:
    """Certify that in degree 2 both quotients collapse onto the
    classical sequence: the relation span is zero, the quotient is the
    wedge square, the expansion matrix literally equals the degree-2
    wedge embedding, and the orbit algebra is the full tensor square
    with matching maps."""
    start = time.perf_counter()
    m = space.dim
    field = space.field
    checks = []

    ctx = bimodule.build_context(space, 2)
    lam2 = comb(m, 2)
    checks.append(CheckResult(
        "relation_rank_zero", ctx.rel_rank == 0,
        f"degree-2 relation rank {ctx.rel_rank}"))
    checks.append(CheckResult(
        "quotient_is_wedge_square", ctx.quotient_dim == lam2,
        f"quotient dim {ctx.quotient_dim}, wedge dim {lam2}"))

    word_index = {w: i for i, w in enumerate(tensor.all_words(m, 2))}
    expansion_rows = tuple(
        tuple(bimodule._expansion_row(field, word_index, term, m * m))
        for term in ctx.terms)
    wedge_rows = exterior.wedge_to_tensor_matrix(space).rows
    checks.append(CheckResult(
        "expansion_matrix_matches_wedge", expansion_rows == wedge_rows,
        f"{len(expansion_rows)} rows compared entrywise"))

    t2 = m * m
    checks.append(CheckResult(
        "orbit_degree2_is_tensor_square", evensym.dim_evensym(m, 2) == t2,
        f"orbit basis size {evensym.dim_evensym(m, 2)}, tensor dim {t2}"))

    # Identify each length-2 word with its orbit class and compare maps.
    maps_ok = True
    for w in tensor.all_words(m, 2):
        word_sym = tensor.symmetrize(tensor.word_element(space, w))
        orbit_sym = evensym.to_sym(evensym.from_word(space, w))
        if word_sym != orbit_sym:
            maps_ok = False
            break
    if maps_ok:
        for pair in exterior.all_wedge_words(m, 2):
            ext = exterior.ext_element(space, 2, {pair: 1})
            via_tensor = exterior.wedge_to_tensor(ext)
            transported = evensym.EvenSymElement(space, 2, {})
            for w, c in via_tensor.terms.items():
                transported = transported + evensym.from_word(space, w, c)
            if transported != evensym.wedge_embed(ext):
                maps_ok = False
                break
    checks.append(CheckResult(
        "orbit_maps_match_degree2", maps_ok,
        "projection and embedding agree under the word/class identification"))

    elapsed = (time.perf_counter() - start) * 1000.0
    return Certificate(
        sequence="degree2", m=m, n=2, field_name=field.name,
        dims={"lambda_dim": lam2, "t_dim": t2, "s_dim": tensor.dim_sym(m, 2)},
        checks=tuple(checks), elapsed_ms=round(elapsed, 3))
