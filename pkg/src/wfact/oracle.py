"""Ground truth by exhaustion for small G(m,p,n).

Builds complete index-level tables (all elements, their multiplication
table, the lattice of subgroups generated by reflection subsets) and runs a
dynamic program over states (current product, subgroup generated so far) to
count reflection factorizations of every length — either all of them or
only the full ones (factors generating the whole group).  Everything here is
deliberately brute-force and capped; it exists to certify the closed-form
pipeline, never to replace it.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

import numpy as np

from ._kernels import build_mult_table, subgroup_closure
from .errors import CapabilityError
from .groups import (
    Element,
    GroupParams,
    Reflection,
    all_elements,
    cycle_data,
    identity,
    reflections,
    validate_element,
)
from .laurent import LaurentPoly, laurent_from_egf

__all__ = [
    "DEFAULT_CAP_W",
    "CAP_SUBGROUPS",
    "ElementTable",
    "SubgroupTable",
    "build_tables",
    "count_factorizations",
    "counts_by_subgroup",
    "sweep_counts",
    "oracle_series",
    "acts_transitively_on_Em",
    "class_representatives",
    "generates_by_closure",
]

DEFAULT_CAP_W = 5000
CAP_SUBGROUPS = 20000
_CAP_ENV = "WFACT_CAP_W"


def _cap_w() -> int:
    raw = os.environ.get(_CAP_ENV, "")
    if raw.strip():
        try:
            return int(raw)
        except ValueError as exc:
            raise ValueError(f"{_CAP_ENV} must be an integer, got {raw!r}") from exc
    return DEFAULT_CAP_W


@dataclass
class ElementTable:
    """Complete indexed model of one group."""

    params: GroupParams
    elements: list[Element]
    index: dict[Element, int]
    mult: np.ndarray
    identity_index: int
    reflection_list: list[Reflection]
    refl_indices: list[int]


@dataclass
class SubgroupTable:
    """All subgroups generated by reflection subsets, with join-by-reflection."""

    members: list[np.ndarray]
    member_sets: list[frozenset[int]]
    join: list[list[int]]
    trivial_index: int
    full_index: int


_TABLE_CACHE: dict[tuple[GroupParams, int], tuple[ElementTable, SubgroupTable]] = {}
_SWEEP_CACHE: dict[GroupParams, tuple[int, list[list[int]], list[list[int]]]] = {}


def build_tables(params: GroupParams) -> tuple[ElementTable, SubgroupTable]:
    """Element and subgroup tables for the group, cached per parameters.

    Guards: group order above the cap (default 5000, env WFACT_CAP_W) or
    more than 20000 subgroups raise CapabilityError.
    """
    cap = _cap_w()
    key = (params, cap)
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    if params.order > cap:
        raise CapabilityError(
            f"{params} has order {params.order}, above the oracle cap {cap} "
            f"(override with the {_CAP_ENV} environment variable)"
        )
    elements = list(all_elements(params))
    assert len(elements) == params.order
    index = {g: i for i, g in enumerate(elements)}
    n = params.n
    perms0 = np.array([[v - 1 for v in g.perm] for g in elements], dtype=np.int32)
    colors = np.array([list(g.colors) for g in elements], dtype=np.int32)
    mult = build_mult_table(perms0, colors, params.m)
    identity_index = index[identity(params)]
    refl_list = reflections(params)
    refl_indices = [index[t.to_element(params)] for t in refl_list]
    etable = ElementTable(
        params, elements, index, mult, identity_index, refl_list, refl_indices
    )
    stable = _build_subgroups(etable)
    _TABLE_CACHE[key] = (etable, stable)
    return etable, stable


def _build_subgroups(etable: ElementTable) -> SubgroupTable:
    mult = etable.mult
    id_idx = etable.identity_index
    refl_elems = etable.refl_indices
    num_refl = len(refl_elems)
    total = len(etable.elements)

    members: list[np.ndarray] = []
    member_sets: list[frozenset[int]] = []
    interned: dict[bytes, int] = {}
    gens_of: list[tuple[int, ...]] = []
    join: list[list[int]] = []

    def intern(member_array: np.ndarray, gens: tuple[int, ...]) -> tuple[int, bool]:
        key = member_array.tobytes()
        existing = interned.get(key)
        if existing is not None:
            return existing, False
        if len(members) >= CAP_SUBGROUPS:
            raise CapabilityError(
                f"{etable.params} produced more than {CAP_SUBGROUPS} reflection "
                "subgroups; oracle subgroup cap exceeded"
            )
        idx = len(members)
        interned[key] = idx
        members.append(member_array)
        member_sets.append(frozenset(int(v) for v in member_array))
        gens_of.append(gens)
        join.append([-1] * num_refl)
        return idx, True

    trivial_members = subgroup_closure(mult, [], id_idx)
    trivial_index, _ = intern(trivial_members, ())
    queue: deque[int] = deque([trivial_index])
    while queue:
        s = queue.popleft()
        for ri, gen_elem in enumerate(refl_elems):
            if gen_elem in member_sets[s]:
                join[s][ri] = s
                continue
            closure = subgroup_closure(mult, gens_of[s] + (gen_elem,), id_idx)
            target, fresh = intern(closure, gens_of[s] + (gen_elem,))
            join[s][ri] = target
            if fresh:
                queue.append(target)
    full_candidates = [i for i, member in enumerate(members) if len(member) == total]
    assert len(full_candidates) <= 1
    full_index = full_candidates[0] if full_candidates else -1
    if full_index < 0:
        # Reflections of G(m,p,n) always generate it; the only way to get here
        # is the trivial group, whose "full" subgroup is the trivial one.
        raise AssertionError("reflection subgroup lattice is missing the top")
    return SubgroupTable(members, member_sets, join, trivial_index, full_index)


def sweep_counts(
    params: GroupParams, n_max: int
) -> tuple[list[list[int]], list[list[int]]]:
    """(all_counts, full_counts): per length N <= n_max, per element index.

    ``all_counts[N][e]`` counts length-N reflection sequences with product
    e — computed by a plain element-level DP, with no subgroup tracking, so
    it is independent of the subgroup machinery.  ``full_counts[N][e]``
    restricts to sequences whose factors generate the whole group, via the
    (product, subgroup) DP.  One sweep serves every element of the group.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    cached = _SWEEP_CACHE.get(params)
    if cached is not None and cached[0] >= n_max:
        _, all_counts, full_counts = cached
        return all_counts[: n_max + 1], full_counts[: n_max + 1]
    etable, stable = build_tables(params)
    total = len(etable.elements)
    mult = etable.mult
    refl_elems = etable.refl_indices
    id_idx = etable.identity_index

    # Element-only DP for mode "all".
    all_counts: list[list[int]] = []
    vec = [0] * total
    vec[id_idx] = 1
    all_counts.append(vec[:])
    for _ in range(n_max):
        fresh = [0] * total
        for e, c in enumerate(vec):
            if not c:
                continue
            row = mult[e]
            for t in refl_elems:
                fresh[int(row[t])] += c
        vec = fresh
        all_counts.append(vec[:])

    # (product, subgroup) DP for mode "full".
    full_counts: list[list[int]] = []
    dp: dict[tuple[int, int], int] = {(id_idx, stable.trivial_index): 1}
    full_idx = stable.full_index

    def record() -> None:
        snapshot = [0] * total
        for (e, s), c in dp.items():
            if s == full_idx:
                snapshot[e] = c
        full_counts.append(snapshot)

    record()
    joins = stable.join
    for _ in range(n_max):
        fresh_dp: dict[tuple[int, int], int] = {}
        for (e, s), c in dp.items():
            row = mult[e]
            jrow = joins[s]
            for ri, t in enumerate(refl_elems):
                state = (int(row[t]), jrow[ri])
                fresh_dp[state] = fresh_dp.get(state, 0) + c
        dp = fresh_dp
        record()
    _SWEEP_CACHE[params] = (n_max, all_counts, full_counts)
    return all_counts, full_counts


def count_factorizations(
    params: GroupParams, g: Element, n_max: int, mode: str = "all"
) -> list[int]:
    """Exact counts [length 0 .. n_max] of reflection factorizations of g."""
    if mode not in ("all", "full"):
        raise ValueError(f"mode must be 'all' or 'full', got {mode!r}")
    validate_element(g, params)
    etable, _ = build_tables(params)
    target = etable.index[g]
    all_counts, full_counts = sweep_counts(params, n_max)
    source = all_counts if mode == "all" else full_counts
    return [source[N][target] for N in range(n_max + 1)]


def counts_by_subgroup(
    params: GroupParams, g: Element, n_max: int
) -> dict[int, list[int]]:
    """Counts of length-N factorizations of g by exact generated subgroup.

    Returns {subgroup index: [counts by length]} with zero rows omitted;
    summing over subgroups reproduces the mode-"all" counts (a test uses
    this as the lattice-decomposition identity).
    """
    validate_element(g, params)
    etable, stable = build_tables(params)
    target = etable.index[g]
    mult = etable.mult
    refl_elems = etable.refl_indices
    out: dict[int, list[int]] = {}

    def record(step: int, dp: dict[tuple[int, int], int]) -> None:
        for (e, s), c in dp.items():
            if e == target and c:
                out.setdefault(s, [0] * (n_max + 1))[step] = c

    dp = {(etable.identity_index, stable.trivial_index): 1}
    record(0, dp)
    for step in range(1, n_max + 1):
        fresh: dict[tuple[int, int], int] = {}
        for (e, s), c in dp.items():
            row = mult[e]
            jrow = stable.join[s]
            for ri, t in enumerate(refl_elems):
                state = (int(row[t]), jrow[ri])
                fresh[state] = fresh.get(state, 0) + c
        dp = fresh
        record(step, dp)
    return out


def oracle_series(params: GroupParams, g: Element, mode: str = "full") -> LaurentPoly:
    """Laurent polynomial reconstructed from brute-force counts.

    Counts are taken over the window [-#A, #R] plus two surplus lengths; the
    reconstruction verifies the surplus entries, so a window violation (or a
    counting bug) surfaces as a loud inconsistency error.
    """
    lo = -params.num_hyperplanes
    hi = params.num_reflections
    width = hi - lo + 1
    prefix = count_factorizations(params, g, width + 1, mode)
    return laurent_from_egf(prefix, lo, hi)


def class_representatives(params: GroupParams) -> list[Element]:
    """One representative per (cycle length, cycle color) class.

    Both the closed-form series and the brute-force counts are constant on
    these classes (conjugation by any permutation-plus-diagonal element
    permutes the reflection set), so sweeping representatives covers every
    conjugacy class of the group.
    """
    if params.order > _cap_w():
        raise CapabilityError(
            f"{params} has order {params.order}, above the oracle cap {_cap_w()} "
            f"(override with the {_CAP_ENV} environment variable)"
        )
    reps: dict[tuple, Element] = {}
    for g in all_elements(params):
        key = cycle_data(g, params).class_key
        if key not in reps:
            reps[key] = g
    return [reps[key] for key in sorted(reps)]


def generates_by_closure(params: GroupParams, refls: list[Reflection]) -> bool:
    """Does the reflection set generate the whole group?  By explicit closure.

    Uses the interned subgroup lattice: fold the join operation over the
    reflections.  This is the independent check against which the
    graph-theoretic generation criterion is validated.
    """
    etable, stable = build_tables(params)
    order = {t: ri for ri, t in enumerate(etable.reflection_list)}
    current = stable.trivial_index
    for t in refls:
        ri = order.get(t)
        if ri is None:
            raise ValueError(f"{t} is not a reflection of {params}")
        current = stable.join[current][ri]
    return current == stable.full_index


def acts_transitively_on_Em(refls: list[Reflection], params: GroupParams) -> bool:
    """Is the action on the m*n colored basis vectors transitive?

    Defined for p = m (no diagonal reflections).  Each symbol is a pair
    (position j, color c) standing for zeta**c e_j; a transposition-like
    reflection with twist k sends (i, c) to (j, c + k) and (j, c) to
    (i, c - k).  Transitivity of the generated subgroup is a single orbit
    check by breadth-first search.  The degenerate n = 1 case has a single
    basis vector and an empty reflection set: transitive iff m = 1.
    """
    if params.p != params.m:
        raise ValueError("the colored-basis action test applies to G(m,m,n) only")
    m, n = params.m, params.n
    if n == 1:
        return m == 1
    for t in refls:
        if t.kind != "transposition":
            raise ValueError(f"unexpected non-transposition reflection {t}")
    start = (1, 0)
    seen = {start}
    frontier = deque([start])
    while frontier:
        pos, color = frontier.popleft()
        for t in refls:
            if pos == t.i:
                nxt = (t.j, (color + t.twist) % m)
            elif pos == t.j:
                nxt = (t.i, (color - t.twist) % m)
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen) == m * n
