"""Calogero-Moser families, cells, and cellular characters.

Families are computed exactly: two irreducible characters lie in the same
family if and only if their central characters agree on a generating set of
the center ({eu} for cyclic groups; {eu, eu', eu'', delta} for B2).  Cells
for cyclic groups are the fibers of i -> K_i; cells for B2 follow the
explicit case analysis over the strata of the (a, b) parameter plane.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .multipoly import MPoly, canon_scalar
from .reflgrp import (Character, ParamVector, ReflectionGroup, build_group,
                      character_table, fake_degree, b_invariant, param_convert,
                      value_on_element)
from .verma import omega_table

__all__ = [
    "FamilyPartition",
    "CellPartition",
    "CellularCharacter",
    "cm_families",
    "rank1_cells",
    "b2_cells",
    "sum_rule_check",
    "twist_family_partition",
    "tensor_with_linear",
    "minimal_b_character",
    "partition_to_json",
]


# ---------------------------------------------------------------------------
# result types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyPartition:
    group_spec: str
    parameters: tuple            # of (label, Fraction) pairs, C-coordinates
    blocks: tuple                # of tuples of character names
    signatures: tuple            # per block, tuple of (generator, value)

    def block_of(self, name: str):
        for b in self.blocks:
            if name in b:
                return b
        raise KeyError(name)


@dataclass(frozen=True)
class CellularCharacter:
    multiplicities: tuple        # of (character name, positive int)

    def as_dict(self) -> dict:
        return dict(self.multiplicities)

    def dimension(self, W: ReflectionGroup) -> int:
        degs = {chi.name: chi.degree for chi in character_table(W)}
        return sum(m * degs[name] for name, m in self.multiplicities)


@dataclass(frozen=True)
class CellPartition:
    group_spec: str
    parameters: tuple
    two_sided: tuple             # of tuples of element names
    left: tuple                  # of tuples of element names
    families: tuple              # per two-sided cell, tuple of char names
    cellular: tuple              # per left cell, CellularCharacter
    supported: bool = True
    note: str = ""


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


def _rational_c_values(W: ReflectionGroup, params: ParamVector) -> dict:
    cvec = param_convert(W, params, "C")
    out = {}
    for label, value in cvec.entries:
        out[label] = canon_scalar(value)
    return out


def cm_families(W: ReflectionGroup, params: ParamVector,
                generators: str = "all") -> FamilyPartition:
    """Partition Irr(W) by equality of the central characters Omega_chi on
    the named generators of the center, evaluated at a rational point.

    generators="euler" restricts the signature to the Euler element alone;
    this is only a necessary condition for lying in the same family and is
    meant for experimentation.
    """
    cvals = _rational_c_values(W, params)
    table = omega_table(W)
    if generators == "all":
        gen_names = sorted(table[next(iter(table))])
    elif generators == "euler":
        gen_names = ["eu"]
    else:
        raise ValueError("generators must be 'all' or 'euler'")
    blocks: list[list[str]] = []
    sigs: list[tuple] = []
    for chi in character_table(W):
        sig = tuple((g, canon_scalar(
            table[chi.name][g].substitute(cvals).constant_value()))
            for g in gen_names)
        for k, existing in enumerate(sigs):
            if existing == sig:
                blocks[k].append(chi.name)
                break
        else:
            blocks.append([chi.name])
            sigs.append(sig)
    return FamilyPartition(W.spec, tuple(sorted(cvals.items())),
                           tuple(tuple(b) for b in blocks), tuple(sigs))


def tensor_with_linear(W: ReflectionGroup, chi_name: str, gamma_name: str) -> str:
    """Name of chi tensored with a linear character."""
    chars = character_table(W)
    by_name = {c.name: c for c in chars}
    chi, gamma = by_name[chi_name], by_name[gamma_name]
    if gamma.degree != 1:
        raise ValueError("second factor must be linear")
    values = tuple(canon_scalar(a * b) for a, b in zip(chi.values, gamma.values))
    for c in chars:
        if c.values == values:
            return c.name
    raise ArithmeticError("tensor product left the character table")


def twist_family_partition(W: ReflectionGroup, fp: FamilyPartition,
                           gamma_name: str) -> tuple:
    """The image of each family under chi -> chi (x) gamma, as a sorted
    tuple of sorted blocks (signatures are not transported)."""
    blocks = []
    for b in fp.blocks:
        blocks.append(tuple(sorted(tensor_with_linear(W, n, gamma_name)
                                   for n in b)))
    return tuple(sorted(blocks))


def minimal_b_character(W: ReflectionGroup, block) -> str:
    """The unique character of minimal b-invariant in a family; asserts
    uniqueness and that its fake degree has coefficient 1 at t^b."""
    chars = {c.name: c for c in character_table(W)}
    bs = [(b_invariant(W, chars[name]), name) for name in block]
    bmin = min(b for b, _ in bs)
    winners = [name for b, name in bs if b == bmin]
    if len(winners) != 1:
        raise ArithmeticError(f"minimal b-invariant not unique in {block}")
    f = fake_degree(W, chars[winners[0]])
    if f.coefficient("t", bmin).constant_value() != 1:
        raise ArithmeticError("leading coefficient of the fake degree is not 1")
    return winners[0]


# ---------------------------------------------------------------------------
# cells
# ---------------------------------------------------------------------------


def rank1_cells(d: int, k_values) -> CellPartition:
    """Cells of the cyclic group of order d at K = (k_0, ..., k_{d-1}).

    Left, right and two-sided cells coincide: s^i and s^j lie in the same
    cell iff k_i = k_j.  The family of a cell omega is {eps^{-i} : i in
    omega} and its cellular character is sum_{i in omega} eps^{-i}.
    """
    W = build_group(f"cyclic:{d}")
    ks = [Fraction(v) for v in k_values]
    if len(ks) != d:
        raise ValueError(f"expected {d} K-values")
    if sum(ks) != 0:
        raise ValueError("K-values must sum to zero")
    fibers: dict = {}
    for i, k in enumerate(ks):
        fibers.setdefault(k, []).append(i)
    cells = sorted(fibers.values())
    names = W.names
    two_sided = tuple(tuple(names[i] for i in cell) for cell in cells)
    families = tuple(tuple(sorted(f"eps^{(-i) % d}" for i in cell))
                     for cell in cells)
    cellular = tuple(
        CellularCharacter(tuple(sorted((f"eps^{(-i) % d}", 1) for i in cell)))
        for cell in cells)
    params = tuple((f"K{i}", ks[i]) for i in range(d))
    return CellPartition(W.spec, params, two_sided, two_sided,
                         families, cellular)


def _cc(*pairs) -> CellularCharacter:
    return CellularCharacter(tuple(pairs))


def b2_cells(a, b) -> CellPartition:
    """Cells and cellular characters of B2 at (a, b) = (C_s, C_t), by the
    explicit case analysis over the parameter strata.

    On the strata a=0 xor b=0 no cell description is implemented; the
    partition is returned with supported=False and only the families filled
    in.  The element-labeling of cells on the other strata depends on a
    normalization choice and is only canonical up to relabeling; the tables
    used here fix one such choice.
    """
    a, b = Fraction(a), Fraction(b)
    params = (("A", a), ("B", b))
    spec = "b2"
    if a == 0 and b == 0:
        whole = ("1", "s", "t", "st", "ts", "sts", "tst", "w0")
        regular = _cc(("1", 1), ("eps", 1), ("eps_s", 1), ("eps_t", 1),
                      ("chi", 2))
        return CellPartition(spec, params, (whole,), (whole,),
                             (("1", "chi", "eps", "eps_s", "eps_t"),),
                             (regular,))
    if a != 0 and b != 0 and a * a != b * b:
        two_sided = (("1",), ("s",), ("tst",), ("w0",),
                     ("t", "st", "ts", "sts"))
        families = (("1",), ("eps_s",), ("eps_t",), ("eps",), ("chi",))
        left = (("1",), ("s",), ("tst",), ("w0",),
                ("t", "st"), ("ts", "sts"))
        cellular = (_cc(("1", 1)), _cc(("eps_s", 1)), _cc(("eps_t", 1)),
                    _cc(("eps", 1)), _cc(("chi", 1)), _cc(("chi", 1)))
        return CellPartition(spec, params, two_sided, left, families, cellular)
    if a != 0 and a == b:
        two_sided = (("1",), ("w0",), ("s", "t", "st", "ts", "sts", "tst"))
        families = (("1",), ("eps",), ("chi", "eps_s", "eps_t"))
        left = (("1",), ("w0",), ("s", "ts", "sts"), ("t", "st", "tst"))
        cellular = (_cc(("1", 1)), _cc(("eps", 1)),
                    _cc(("chi", 1), ("eps_s", 1)),
                    _cc(("chi", 1), ("eps_t", 1)))
        return CellPartition(spec, params, two_sided, left, families, cellular)
    if a != 0 and a == -b:
        # obtained from the a = b stratum by tensoring with eps_t
        base = b2_cells(a, a)
        W = build_group("b2")
        families = tuple(tuple(sorted(tensor_with_linear(W, n, "eps_t")
                                      for n in fam))
                         for fam in base.families)
        cellular = tuple(
            CellularCharacter(tuple(sorted(
                (tensor_with_linear(W, n, "eps_t"), m)
                for n, m in cc.multiplicities)))
            for cc in base.cellular)
        return CellPartition(spec, params, base.two_sided, base.left,
                             families, cellular)
    # a = 0 xor b = 0
    if a == 0:
        families = (("1", "eps_s"), ("eps", "eps_t"), ("chi",))
    else:
        families = (("1", "eps_t"), ("eps", "eps_s"), ("chi",))
    return CellPartition(
        spec, params, (), (), families, (), supported=False,
        note="unsupported: no cell description is implemented on this stratum")


# ---------------------------------------------------------------------------
# sum rules
# ---------------------------------------------------------------------------


def sum_rule_check(W: ReflectionGroup, cells: CellPartition) -> dict:
    """Verify the three numerical sum rules:
      (i)  |Gamma| = sum over its family of chi(1)^2, per two-sided cell;
      (ii) sum_chi mult * chi(1) = |C|, per left cell;
      (iii) sum over left cells of mult_{C,chi} = chi(1), per character.
    Returns {"two_sided_squares": bool, "left_dimensions": bool,
             "multiplicity_columns": bool, "all": bool, "details": [...]}.
    """
    if not cells.supported:
        return {"two_sided_squares": None, "left_dimensions": None,
                "multiplicity_columns": None, "all": None,
                "details": [{"note": cells.note}]}
    degs = {chi.name: chi.degree for chi in character_table(W)}
    details = []
    ok1 = True
    for cell, fam in zip(cells.two_sided, cells.families):
        lhs, rhs = len(cell), sum(degs[n] ** 2 for n in fam)
        good = lhs == rhs
        ok1 = ok1 and good
        details.append({"rule": "two_sided_squares", "cell": list(cell),
                        "size": lhs, "sum_of_squares": rhs, "pass": good})
    ok2 = True
    for cell, cc in zip(cells.left, cells.cellular):
        lhs = len(cell)
        rhs = cc.dimension(W)
        good = lhs == rhs
        ok2 = ok2 and good
        details.append({"rule": "left_dimensions", "cell": list(cell),
                        "size": lhs, "character_dimension": rhs, "pass": good})
    ok3 = True
    totals = {name: 0 for name in degs}
    for cc in cells.cellular:
        for name, m in cc.multiplicities:
            totals[name] += m
    for name, total in totals.items():
        good = total == degs[name]
        ok3 = ok3 and good
        details.append({"rule": "multiplicity_columns", "character": name,
                        "total": total, "degree": degs[name], "pass": good})
    return {"two_sided_squares": ok1, "left_dimensions": ok2,
            "multiplicity_columns": ok3, "all": ok1 and ok2 and ok3,
            "details": details}


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def partition_to_json(families: FamilyPartition, cells: CellPartition | None) -> dict:
    out = {
        "parameters": {k: str(v) for k, v in families.parameters},
        "families": [sorted(b) for b in families.blocks],
        "cells": {"two_sided": [], "left": []},
        "cellular_characters": [],
    }
    if cells is not None:
        out["cells"] = {
            "two_sided": [list(c) for c in cells.two_sided],
            "left": [list(c) for c in cells.left],
        }
        out["cellular_characters"] = [
            {"cell": list(cell), "character": cc.as_dict()}
            for cell, cc in zip(cells.left, cells.cellular)
        ]
        if not cells.supported:
            out["note"] = cells.note
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
