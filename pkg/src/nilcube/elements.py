"""Sparse homogeneous elements of the free algebra, the cube linearizations
T1/T2/T3, generation of the defining identity system of a homogeneous
component, and the canonical-form rewriting.
"""

from __future__ import annotations

from itertools import product

from .coeffs import Field
from .words import (
    Multidegree,
    Word,
    enumerate_words,
    is_canonical,
    mdeg,
    norm,
    occurrences,
)


class Element:
    """Finite map word -> nonzero coefficient; all words share one multidegree."""

    __slots__ = ("terms", "field")

    def __init__(self, terms: dict, field: Field, _checked: bool = False):
        if not _checked:
            terms = {tuple(w): c for w, c in terms.items() if c}
            keys = iter(terms)
            first = next(keys, None)
            if first is not None:
                base = sorted(first)
                for w in keys:
                    if sorted(w) != base:
                        raise ValueError("mixed multidegrees in one element")
        self.terms = terms
        self.field = field

    @classmethod
    def from_word(cls, w: Word, field: Field, coef=None) -> "Element":
        return cls({tuple(w): field.one if coef is None else coef}, field, _checked=True)

    @classmethod
    def zero(cls, field: Field) -> "Element":
        return cls({}, field, _checked=True)

    def is_zero(self) -> bool:
        return not self.terms

    def highest_term(self) -> Word:
        if not self.terms:
            raise ValueError("zero element has no highest term")
        return max(self.terms)

    def mdeg(self, d: int) -> Multidegree:
        return mdeg(self.highest_term(), d)

    def copy(self) -> "Element":
        return Element(dict(self.terms), self.field, _checked=True)

    def __eq__(self, other):
        return isinstance(other, Element) and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __add__(self, other: "Element") -> "Element":
        f = self.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = f.add(out.get(w, f.zero), c)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return Element(out, f, _checked=True)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        f = self.field
        return Element({w: f.neg(c) for w, c in self.terms.items()}, f, _checked=True)

    def scale(self, c) -> "Element":
        f = self.field
        if not c:
            return Element.zero(f)
        return Element({w: f.mul(coef, c) for w, coef in self.terms.items()}, f, _checked=True)

    def __mul__(self, other: "Element") -> "Element":
        """Free-algebra product (word concatenation, distributed)."""
        f = self.field
        out: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                s = f.add(out.get(w, f.zero), f.mul(a, b))
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return Element(out, f, _checked=True)

    def monic(self) -> "Element":
        """Scale so the highest term has coefficient 1."""
        if not self.terms:
            return self
        lead = max(self.terms)
        c = self.terms[lead]
        if c == self.field.one:
            return self
        return self.scale(self.field.inv(c))

    def key(self):
        """Canonical hashable form, for dedup and deterministic sorting."""
        return tuple(sorted(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "Element(0)"
        bits = " + ".join(f"{c}*{''.join(map(str, w))}" for w, c in sorted(self.terms.items()))
        return f"Element({bits})"


def _elem(x, field: Field) -> Element:
    return x if isinstance(x, Element) else Element.from_word(tuple(x), field)


def _check_nonempty(*elems: Element):
    for e in elems:
        if e.is_zero() or () in e.terms:
            raise ValueError("T-operators need non-empty arguments")


def t1(a, field: Field) -> Element:
    """a^3."""
    a = _elem(a, field)
    _check_nonempty(a)
    return a * a * a


def t2(a, b, field: Field) -> Element:
    """a^2 b + a b a + b a^2."""
    a, b = _elem(a, field), _elem(b, field)
    _check_nonempty(a, b)
    return a * a * b + a * b * a + b * a * a


def t3(a, b, c, field: Field) -> Element:
    """Sum of the six products of a, b, c in every order."""
    a, b, c = _elem(a, field), _elem(b, field), _elem(c, field)
    _check_nonempty(a, b, c)
    return a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a


# ---------------------------------------------------------------------------
# Generation of the identity system of one homogeneous component.
# ---------------------------------------------------------------------------


def sub_multidegrees(bound: Multidegree):
    """All multidegrees m with 0 <= m <= bound componentwise."""
    return product(*(range(e + 1) for e in bound))


def _sub(a: Multidegree, b: Multidegree) -> Multidegree:
    return tuple(x - y for x, y in zip(a, b))


class _WordCache:
    def __init__(self):
        self._cache: dict[Multidegree, list[Word]] = {}

    def words(self, m: Multidegree) -> list[Word]:
        if norm(m) == 0:
            return [()]
        got = self._cache.get(m)
        if got is None:
            got = list(enumerate_words(m))
            self._cache[m] = got
        return got


def _body_t1(a: Word):
    return ((a + a + a, 1),)


def _body_t2(a: Word, b: Word):
    acc: dict[Word, int] = {}
    for w in (a + a + b, a + b + a, b + a + a):
        acc[w] = acc.get(w, 0) + 1
    return tuple(acc.items())


def _body_t3(a: Word, b: Word, c: Word):
    acc: dict[Word, int] = {}
    for w in (a + b + c, a + c + b, b + a + c, b + c + a, c + a + b, c + b + a):
        acc[w] = acc.get(w, 0) + 1
    return tuple(acc.items())


def _collect(results: list, seen: set, field: Field, body, pad: Multidegree, cache: _WordCache):
    """Pad a body by every factorization f1 . body . f2 of multidegree ``pad``."""
    body_f = tuple((w, field.of(c)) for w, c in body)
    body_f = tuple((w, c) for w, c in body_f if c)
    if not body_f:
        return
    for left in sub_multidegrees(pad):
        right = _sub(pad, left)
        for f1 in cache.words(left):
            for f2 in cache.words(right):
                terms: dict = {}
                for w, c in body_f:
                    key = f1 + w + f2
                    s = terms.get(key)
                    terms[key] = c if s is None else field.add(s, c)
                terms = {w: c for w, c in terms.items() if c}
                if not terms:
                    continue
                elem = Element(terms, field, _checked=True).monic()
                k = elem.key()
                if k not in seen:
                    seen.add(k)
                    results.append(elem)


def generate_s(delta: Multidegree, field: Field) -> list[Element]:
    """Every identity f1*T_i(...)*f2 of multidegree ``delta``.

    Output is duplicate-free, each element monic at its highest term; zero
    elements (e.g. T3 with a repeated word argument in characteristic 2) are
    dropped.  Deterministic order: highest term descending, then term map.
    """
    delta = tuple(delta)
    if norm(delta) < 1:
        raise ValueError("need a non-empty multidegree")
    cache = _WordCache()
    results: list[Element] = []
    seen: set = set()

    subs = [tuple(m) for m in sub_multidegrees(delta)]
    nonzero = [m for m in subs if norm(m) >= 1]

    # T1 bodies a^3, deg(a) unrestricted.
    for m in nonzero:
        m3 = tuple(3 * e for e in m)
        if any(x > y for x, y in zip(m3, delta)):
            continue
        pad = _sub(delta, m3)
        for a in cache.words(m):
            _collect(results, seen, field, _body_t1(a), pad, cache)

    # T2 bodies a^2 b + a b a + b a^2 (ordered pairs; T2 is not symmetric).
    for ma in nonzero:
        m2 = tuple(2 * e for e in ma)
        if any(x > y for x, y in zip(m2, delta)):
            continue
        rest = _sub(delta, m2)
        for mb in sub_multidegrees(rest):
            mb = tuple(mb)
            if norm(mb) < 1:
                continue
            pad = _sub(rest, mb)
            for a in cache.words(ma):
                for b in cache.words(mb):
                    _collect(results, seen, field, _body_t2(a, b), pad, cache)

    # T3 bodies, one representative per unordered triple of words.
    for ma in nonzero:
        rest_a = _sub(delta, ma)
        if any(e < 0 for e in rest_a):
            continue
        for mb in sub_multidegrees(rest_a):
            mb = tuple(mb)
            if norm(mb) < 1 or mb < ma:
                continue
            rest_b = _sub(rest_a, mb)
            for mc in sub_multidegrees(rest_b):
                mc = tuple(mc)
                if norm(mc) < 1 or mc < mb:
                    continue
                pad = _sub(rest_b, mc)
                for a in cache.words(ma):
                    for b in cache.words(mb):
                        if mb == ma and b < a:
                            continue
                        for c in cache.words(mc):
                            if mc == mb and c < b:
                                continue
                            _collect(results, seen, field, _body_t3(a, b, c), pad, cache)

    results.sort(key=lambda e: (e.highest_term(), e.key()), reverse=True)
    return results


def generate_s_pruned_p3(delta: Multidegree, field: Field) -> list[Element]:
    """Characteristic-3 multilinear system pruned to T3 bodies with
    deg(a1) <= 3 and deg(a2) = deg(a3) = 1; spans the same row space.
    """
    delta = tuple(delta)
    if field.p != 3:
        raise ValueError("pruned generation applies in characteristic 3 only")
    if any(e != 1 for e in delta):
        raise ValueError("pruned generation applies to multilinear components only")
    cache = _WordCache()
    results: list[Element] = []
    seen: set = set()

    for ma in sub_multidegrees(delta):
        ma = tuple(ma)
        if not 1 <= norm(ma) <= 3:
            continue
        rest_a = _sub(delta, ma)
        for mb in sub_multidegrees(rest_a):
            mb = tuple(mb)
            if norm(mb) != 1:
                continue
            rest_b = _sub(rest_a, mb)
            for mc in sub_multidegrees(rest_b):
                mc = tuple(mc)
                if norm(mc) != 1 or mc < mb:
                    continue
                pad = _sub(rest_b, mc)
                for a in cache.words(ma):
                    if norm(ma) == 1 and (a > cache.words(mb)[0] or a > cache.words(mc)[0]):
                        # unordered triple of three letters: keep a smallest
                        continue
                    for b in cache.words(mb):
                        for c in cache.words(mc):
                            _collect(results, seen, field, _body_t3(a, b, c), pad, cache)

    results.sort(key=lambda e: (e.highest_term(), e.key()), reverse=True)
    return results


# ---------------------------------------------------------------------------
# Rewriting by x u x = -(x^2 u + u x^2) and x u x^2 = -x^2 u x.
# ---------------------------------------------------------------------------


def _rewrite_word(w: Word, letter: int):
    """One rewriting step for ``letter``.

    Returns None when the occurrence pattern is already canonical, [] when the
    word vanishes (letter degree > 3 or a consecutive cube), else the list of
    (sign, word) replacements.
    """
    pos = occurrences(w, letter)
    k = len(pos)
    if k <= 1:
        return None
    if k >= 4:
        return []
    if k == 2:
        if pos[1] == pos[0] + 1:
            return None
    else:
        if pos[1] == pos[0] + 1:
            if pos[2] == pos[1] + 1:
                return []  # consecutive cube
            return None  # x^2 u x with u non-empty
    # first consecutive pair with a gap: x u x -> -(x^2 u + u x^2)
    p1 = pos[0] if pos[1] > pos[0] + 1 else pos[1]
    p2 = pos[1] if pos[1] > pos[0] + 1 else pos[2]
    head, gap, tail = w[:p1], w[p1 + 1:p2], w[p2 + 1:]
    sq = (letter, letter)
    return [(-1, head + sq + gap + tail), (-1, head + gap + sq + tail)]


def rewrite_step_eq1(g: Element, letter: int) -> Element:
    """Rewrite until every surviving word is canonical with respect to ``letter``."""
    f = g.field
    out: dict = {}
    stack = list(g.terms.items())
    while stack:
        w, c = stack.pop()
        step = _rewrite_word(w, letter)
        if step is None:
            s = f.add(out.get(w, f.zero), c)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        else:
            for sign, w2 in step:
                stack.append((w2, f.mul(c, f.of(sign))))
    return Element(out, f, _checked=True)


def canonicalize(g: Element, d: int | None = None) -> Element:
    """Fixpoint of rewrite_step_eq1 over letters ascending; output is supported
    on words canonical with respect to every letter.
    """
    if g.is_zero():
        return g
    if d is None:
        d = max(max(w) for w in g.terms)
    while True:
        before = g.terms
        for letter in range(1, d + 1):
            g = rewrite_step_eq1(g, letter)
        if g.terms == before:
            return g
