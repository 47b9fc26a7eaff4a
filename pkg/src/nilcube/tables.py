"""Closed-form basis tables for the multigraded components, across the three
characteristic regimes (0 or >3, 2, 3), plus cardinality formulas.

All constructors take the sorted multidegree profile (entries descending,
no zeros) and emit words over the alphabet 1..d in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .words import Multidegree, Word, mdeg, norm


@dataclass(frozen=True)
class BasisTable:
    p: int
    delta: Multidegree
    words: tuple[Word, ...]
    source: str

    def __len__(self):
        return len(self.words)


def _run(i: int, j: int) -> Word:
    """The ascending word x_i x_{i+1} ... x_j; empty when i > j."""
    return tuple(range(i, j + 1)) if i <= j else ()


def _shift(w: Word, by: int) -> Word:
    return tuple(l + by for l in w)


def _sorted_table(p, delta, words, source) -> BasisTable:
    return BasisTable(p, tuple(delta), tuple(sorted(set(words))), source)


# ---------------------------------------------------------------------------
# Small components, characteristic != 3 (d <= 3) and the char-0/p>3 regime.
# ---------------------------------------------------------------------------

_PROP1 = {
    (1,): [(1,)],
    (2,): [(1, 1)],
    (1, 1): [(1, 2), (2, 1)],
    (1, 1, 1): [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2)],
    (2, 1): [(1, 1, 2), (2, 1, 1)],
    (2, 1, 1): [(1, 1, 2, 3), (1, 1, 3, 2), (2, 1, 1, 3), (2, 3, 1, 1), (3, 2, 1, 1)],
    (2, 2): [(1, 1, 2, 2), (2, 2, 1, 1)],
    (3, 1): [(1, 1, 2, 1)],
    (2, 2, 1): [(1, 1, 2, 2, 3), (2, 2, 1, 1, 3), (3, 1, 1, 2, 2)],
    (3, 1, 1): [(1, 1, 2, 3, 1), (1, 1, 3, 2, 1)],
    (3, 2): [(1, 1, 2, 2, 1)],
}

_P0_14 = [
    (1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 2, 4), (1, 3, 4, 2), (1, 4, 2, 3),
    (2, 1, 3, 4), (2, 1, 4, 3), (2, 3, 1, 4), (2, 3, 4, 1), (2, 4, 1, 3),
    (3, 1, 2, 4), (3, 4, 1, 2),
]

_P0_15 = [
    (1, 2, 3, 4, 5), (1, 2, 3, 5, 4), (1, 2, 4, 3, 5), (1, 2, 4, 5, 3), (1, 2, 5, 3, 4),
    (1, 3, 2, 4, 5), (1, 3, 2, 5, 4), (1, 3, 4, 2, 5), (1, 3, 4, 5, 2), (1, 3, 5, 2, 4),
    (1, 4, 2, 3, 5), (1, 4, 5, 2, 3), (2, 3, 1, 4, 5), (2, 3, 4, 1, 5), (2, 3, 5, 1, 4),
]

_P0_213 = [
    (1, 1, 2, 3, 4), (1, 1, 3, 2, 4), (1, 1, 4, 2, 3),
    (2, 1, 1, 3, 4), (2, 1, 1, 4, 3), (2, 3, 1, 1, 4), (2, 4, 1, 1, 3),
]


def table_small(p: int, delta: Multidegree) -> BasisTable:
    """Literal small tables: the d<=3 list for p != 3, extended to every
    multidegree when p = 0 or p > 3 (empty from norm 6 on)."""
    delta = tuple(delta)
    d = len(delta)
    if p == 3 or any(e < 1 for e in delta) or list(delta) != sorted(delta, reverse=True):
        raise ValueError("table_small needs p != 3 and a sorted positive multidegree")
    if d <= 3:
        if any(e > 3 for e in delta):
            return _sorted_table(p, delta, [], "Prop1")
        return _sorted_table(p, delta, _PROP1.get(delta, []), "Prop1")
    if p == 2:
        raise ValueError("p=2 with d >= 4 is outside the small tables")
    if delta == (1, 1, 1, 1):
        return _sorted_table(p, delta, _P0_14, "PropP0")
    if delta == (1, 1, 1, 1, 1):
        return _sorted_table(p, delta, _P0_15, "PropP0")
    if delta == (2, 1, 1, 1):
        return _sorted_table(p, delta, _P0_213, "PropP0")
    # everything else with d >= 4 has norm >= 6
    return _sorted_table(p, delta, [], "PropP0")


# ---------------------------------------------------------------------------
# Multilinear recursions for p = 2, 3.
# ---------------------------------------------------------------------------


def _b1d_p2(d: int) -> list[Word]:
    if d == 1:
        return [(1,)]
    prev = _b1d_p2(d - 1)
    out = {(1,) + _shift(w, 1) for w in prev}
    out.update(_run(2, k) + (1,) + _run(k + 1, d) for k in range(2, d + 1))
    if d >= 3:
        out.add(_run(2, d - 2) + (d, 1, d - 1))
        out.update((k,) + _run(1, k - 1) + _run(k + 1, d) for k in range(3, d + 1))
    if d == 4:
        out.add((2, 1, 4, 3))
    return sorted(out)


def _b1d_p3(d: int) -> list[Word]:
    if d == 0:
        return [()]  # internal convention for table assembly only
    if d == 1:
        return [(1,)]
    prev = _b1d_p3(d - 1)
    out = {(1,) + _shift(w, 1) for w in prev}
    out.update((2,) + tuple(l + 1 if l >= 2 else l for l in w) for w in prev)
    out.update(_run(3, k) + (1, 2) + _run(k + 1, d) for k in range(3, d + 1))
    return sorted(out)


def b1d(p: int, d: int) -> BasisTable:
    """The recursive multilinear table for p = 2 or 3."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if p == 2:
        words = _b1d_p2(d)
    elif p == 3:
        words = _b1d_p3(d)
    else:
        raise ValueError("recursive multilinear tables exist for p in {2,3} only")
    return BasisTable(p, (1,) * d, tuple(words), "recursive-B1d")


# ---------------------------------------------------------------------------
# p = 2, d >= 4 (norms d+1 and d+2).
# ---------------------------------------------------------------------------


def _without(d: int, skip: set[int]) -> Word:
    return tuple(i for i in range(2, d + 1) if i not in skip)


def table_p2(delta: Multidegree) -> BasisTable:
    """The p=2 tables for the profiles 21^{d-1}, 2^2 1^{d-2} and 31^{d-1}, d >= 4."""
    delta = tuple(delta)
    d = len(delta)
    if d < 4:
        raise ValueError("d <= 3 is covered by the small tables")
    ones = (1,) * (d - 1)
    if delta == (2,) + ones:
        words = []
        for i in range(2, d + 1):
            words.append((1, 1, i) + _without(d, {i}))          # a_i
            words.append(_without(d, {i}) + (i, 1, 1))          # b_i
        words.append((2, 1, 1, 3) + _run(4, d))                 # c_23
        if d == 4:
            words.append((3, 1, 1, 2) + _run(4, d))             # c_32
        return _sorted_table(2, delta, words, "Theo2")
    if delta == (2, 2) + (1,) * (d - 2):
        words = [
            (1, 1, 2, 2) + _run(3, d),
            (2, 2, 1, 1) + _run(3, d),
        ]
        return _sorted_table(2, delta, words, "Theo2")
    if delta == (3,) + ones:
        return _sorted_table(2, delta, [(1, 1) + _run(2, d) + (1,)], "Theo2")
    raise ValueError(f"profile {delta} is not one of the p=2 table families")


# ---------------------------------------------------------------------------
# p = 3 (Theorem 3 families, every profile 3^r 2^s 1^l).
# ---------------------------------------------------------------------------


def _u_word(t: int) -> Word:
    """u_{2t} = w_{12} w_{34} ... ; w_{ij} = x_i^2 x_j^2 x_i x_j."""
    out: Word = ()
    for i in range(1, t + 1):
        a, b = 2 * i - 1, 2 * i
        out += (a, a, b, b, a, b)
    return out


def _b_3r_1m(r: int, m: int) -> list[Word]:
    """Words of the profile 3^r 1^m over the alphabet 1..r+m."""
    if r == 0:
        return list(_b1d_p3(m))
    words: list[Word] = []
    if r % 2 == 0:
        t = r // 2
        u = _u_word(t)
        words.extend(u + _shift(v, r) for v in _b1d_p3(m))
        if t >= 1 and m >= 1:
            for k in range(1, m + 1):
                words.append(
                    _u_word(t - 1)
                    + (2 * t - 1, 2 * t - 1, 2 * t, 2 * t)
                    + _run(2 * t + 1, 2 * t + k)
                    + (2 * t - 1, 2 * t)
                    + _run(2 * t + k + 1, 2 * t + m)
                )
    else:
        t = (r - 1) // 2
        base = 2 * t + 1
        if m >= 1:
            # prefix letter base+1 exists only when some single-degree letter is present
            def sub(v: Word) -> Word:
                return tuple(base if l == 1 else l + base for l in v)

            words.extend(_u_word(t) + (base, base, base + 1) + sub(v) for v in _b1d_p3(m))
        if m >= 2:
            for k in range(3, m + 2):
                words.append(
                    _u_word(t)
                    + (base, base)
                    + _run(base + 2, base + k - 1)
                    + (base, base + 1)
                    + _run(base + k, base + m)
                )
        if t >= 1:
            words.append(
                _u_word(t - 1)
                + (2 * t - 1, 2 * t - 1, 2 * t, 2 * t, base, base, 2 * t - 1, 2 * t, base)
                + _run(base + 1, base + m)
            )
    return words


def table_p3(r: int, s: int, l: int) -> BasisTable:
    """The p=3 table for the profile 3^r 2^s 1^l (letters r+1..r+s squared)."""
    if min(r, s, l) < 0 or r + s + l == 0:
        raise ValueError("need non-negative r,s,l, not all zero")
    base = _b_3r_1m(r, s + l)
    words = []
    for w in base:
        out: list[int] = []
        for letter in w:
            out.append(letter)
            if r + 1 <= letter <= r + s:
                out.append(letter)
        words.append(tuple(out))
    delta = (3,) * r + (2,) * s + (1,) * l
    return _sorted_table(3, delta, words, "Theo3")


# ---------------------------------------------------------------------------
# Dispatcher over every characteristic and sorted profile, plus counts.
# ---------------------------------------------------------------------------


def profile(delta: Multidegree) -> Multidegree:
    """Sorted-descending positive part of a multidegree."""
    return tuple(sorted((e for e in delta if e), reverse=True))


def table(p: int, delta: Multidegree) -> BasisTable:
    """Basis table for any sorted positive multidegree profile."""
    delta = tuple(delta)
    if not delta or any(e < 1 for e in delta) or list(delta) != sorted(delta, reverse=True):
        raise ValueError("need a sorted positive multidegree profile")
    d = len(delta)
    if any(e > 3 for e in delta):
        if p == 3:
            return _sorted_table(p, delta, [], "Theo3")
        return _sorted_table(p, delta, [], "Prop1" if d <= 3 else "Theo2" if p == 2 else "PropP0")
    if p == 3:
        r = sum(1 for e in delta if e == 3)
        s = sum(1 for e in delta if e == 2)
        l = sum(1 for e in delta if e == 1)
        return table_p3(r, s, l)
    if d <= 3 or p != 2:
        return table_small(p, delta)
    # p = 2, d >= 4
    if delta == (1,) * d:
        return b1d(2, d)
    try:
        return table_p2(delta)
    except ValueError:
        return _sorted_table(2, delta, [], "Theo2")


def cardinality(p: int, delta: Multidegree) -> int:
    """Closed-form size of the table for a covered (p, profile) pair."""
    delta = profile(delta)
    d = len(delta)
    if p == 3:
        r = sum(1 for e in delta if e == 3)
        s = sum(1 for e in delta if e == 2)
        l = sum(1 for e in delta if e == 1)
        if r + s + l != d:
            raise ValueError("entries above 3 have empty components")
        m = s + l
        if r == 0:
            return 2 ** m - m if m else 0
        if r == 1:
            return 2 ** m - 1 if m else 0
        return 2 ** m
    if p == 2:
        if delta == (1,) * d:
            return (1, 2, 5)[d - 1] if d <= 3 else d * (d - 1)
        if d >= 4 and delta == (2,) + (1,) * (d - 1):
            return 8 if d == 4 else 2 * d - 1
        if d >= 4 and delta == (2, 2) + (1,) * (d - 2):
            return 2
        if d >= 4 and delta == (3,) + (1,) * (d - 1):
            return 1
        if d <= 3:
            return len(_PROP1.get(delta, [])) if all(e <= 3 for e in delta) else 0
        raise ValueError(f"no closed-form count for p=2, profile {delta}")
    if p == 0 or p > 3:
        if norm(delta) >= 6:
            return 0
        if d <= 3:
            return len(_PROP1.get(delta, [])) if all(e <= 3 for e in delta) else 0
        return {(1, 1, 1, 1): 12, (1, 1, 1, 1, 1): 15, (2, 1, 1, 1): 7}[delta]
    raise ValueError(f"unsupported characteristic {p}")


def dim_from_tables(p: int, delta: Multidegree) -> int:
    """Component dimension read off the closed-form tables (any multidegree;
    dimensions are invariant under permuting letters)."""
    prof = profile(delta)
    if not prof:
        return 0
    if any(e > 3 for e in prof):
        return 0
    return len(table(p, prof).words)
