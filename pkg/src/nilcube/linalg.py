"""Sparse exact row reduction of identity systems keyed by words.

Rows are kept fully reduced at all times: every row is monic at its highest
word (the pivot) and its tail is supported on non-pivot words only.  The fully
reduced form of a row space is unique, so the result does not depend on input
order; inputs are sorted anyway so the characteristic-0 denominator flag is
reproducible.
"""

from __future__ import annotations

from .coeffs import Field, is_23_smooth_numerator
from .elements import Element, generate_s
from .words import Multidegree, Word, count_words, enumerate_words, mdeg, norm


class EchelonSystem:
    """Reduced echelon form of an identity system of one homogeneous component.

    ``_pivots`` maps each leading word to its tail (the rest of the monic row,
    supported on non-pivot words only).
    """

    def __init__(self, delta: Multidegree, field: Field):
        self.delta = tuple(delta)
        self.field = field
        self._pivots: dict[Word, dict] = {}
        self._occ: dict[Word, set] = {}
        # None in positive characteristic; over Q: True while every pivot
        # inverse stays in Z[1/2,1/3].
        self.denominator_flag = True if field.p == 0 else None

    # -- construction -------------------------------------------------------

    def _reduce(self, g: dict) -> dict:
        """Eliminate pivot words from ``g`` in place; tails are pivot-free, so a
        single pass over the pivot words present suffices."""
        pivots = self._pivots
        hits = [w for w in g if w in pivots]
        if not hits:
            return g
        hits.sort(reverse=True)
        p = self.field.p
        if p:
            for w in hits:
                c = g.pop(w)
                for v, cv in pivots[w].items():
                    s = (g.get(v, 0) - c * cv) % p
                    if s:
                        g[v] = s
                    else:
                        g.pop(v, None)
        else:
            zero = self.field.zero
            for w in hits:
                c = g.pop(w)
                for v, cv in pivots[w].items():
                    s = g.get(v, zero) - c * cv
                    if s:
                        g[v] = s
                    else:
                        g.pop(v, None)
        return g

    def insert(self, elem: Element) -> bool:
        """Add one identity; returns True when the rank grew."""
        g = self._reduce(dict(elem.terms))
        if not g:
            return False
        f = self.field
        lead = max(g)
        c = g.pop(lead)
        if f.p == 0 and self.denominator_flag and not is_23_smooth_numerator(c):
            self.denominator_flag = False
        inv = f.inv(c)
        tail = {v: f.mul(cv, inv) for v, cv in g.items()}
        # the new pivot may appear in older tails; substitute it away
        for plead in self._occ.pop(lead, ()):
            prow = self._pivots[plead]
            k = prow.pop(lead)
            for v, cv in tail.items():
                s = f.sub(prow.get(v, f.zero), f.mul(k, cv))
                if s:
                    if v not in prow:
                        self._occ.setdefault(v, set()).add(plead)
                    prow[v] = s
                elif v in prow:
                    del prow[v]
                    self._occ[v].discard(plead)
        for v in tail:
            self._occ.setdefault(v, set()).add(lead)
        self._pivots[lead] = tail
        return True

    # -- queries -------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def leading_map(self) -> dict:
        return self._pivots

    def row(self, lead: Word) -> Element:
        tail = self._pivots[lead]
        terms = dict(tail)
        terms[lead] = self.field.one
        return Element(terms, self.field, _checked=True)

    def rows(self) -> list[Element]:
        """Rows as monic elements, highest pivot first."""
        return [self.row(lead) for lead in sorted(self._pivots, reverse=True)]

    def reduce_element(self, g: Element) -> Element:
        """Normal form of ``g`` modulo the row space."""
        self._check_mdeg(g)
        return Element(self._reduce(dict(g.terms)), self.field, _checked=True)

    def membership(self, g: Element) -> bool:
        """True iff ``g`` lies in the row space."""
        self._check_mdeg(g)
        return not self._reduce(dict(g.terms))

    def minimal_basis(self) -> list[Word]:
        """Words of the component that are not leading words, ascending.

        Equivalently the greedy-from-smallest basis of the quotient: every
        pivot row expresses its leading word through strictly smaller words.
        """
        return [w for w in enumerate_words(self.delta) if w not in self._pivots]

    def dim(self) -> int:
        return count_words(self.delta) - self.rank

    def _check_mdeg(self, g: Element):
        if g.is_zero():
            return
        if mdeg(g.highest_term(), len(self.delta)) != self.delta:
            raise ValueError("element multidegree does not match the system")


def echelonize(system, delta: Multidegree, field: Field) -> EchelonSystem:
    """Fully reduced echelon form of ``system`` with pivots on highest terms."""
    delta = tuple(delta)
    es = EchelonSystem(delta, field)
    rows = sorted(system, key=lambda e: (e.highest_term(), e.key()), reverse=True)
    d = len(delta)
    for elem in rows:
        if elem.is_zero():
            continue
        if mdeg(elem.highest_term(), d) != delta:
            raise ValueError("mixed multidegrees in system")
        es.insert(elem)
    return es


def component_echelon(field: Field, delta: Multidegree, system=None) -> EchelonSystem:
    """Echelonized identity system of the component of multidegree ``delta``."""
    if system is None:
        system = generate_s(delta, field)
    return echelonize(system, delta, field)


def dim_component(p: int, delta: Multidegree) -> int:
    """Dimension of the component; zero outright when some letter degree > 3."""
    delta = tuple(delta)
    if any(e >= 4 for e in delta):
        return 0
    if norm(delta) == 0:
        return 0
    field = Field(p)
    return component_echelon(field, delta).dim()


def rank_of_vectors(vectors: list[dict], field: Field) -> int:
    """Rank of sparse coefficient vectors (dict key -> scalar) by plain Gauss."""
    pivots: dict = {}
    rank = 0
    for vec in vectors:
        g = dict(vec)
        while g:
            lead = max(g)
            c = g.pop(lead)
            if lead not in pivots:
                inv = field.inv(c)
                pivots[lead] = {v: field.mul(cv, inv) for v, cv in g.items()}
                rank += 1
                break
            for v, cv in pivots[lead].items():
                s = field.sub(g.get(v, field.zero), field.mul(c, cv))
                if s:
                    g[v] = s
                else:
                    g.pop(v, None)
    return rank


def spans_quotient(es: EchelonSystem, basis_words) -> bool:
    """True iff the words are linearly independent in the quotient by the row
    space (with |words| = dim this makes them a basis of the component)."""
    vectors = []
    for w in basis_words:
        nf = es.reduce_element(Element.from_word(w, es.field))
        if nf.is_zero():
            return False
        vectors.append(nf.terms)
    return rank_of_vectors(vectors, es.field) == len(vectors)
