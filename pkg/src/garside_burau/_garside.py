"""Left normal forms in a Garside group, shared by the classical and dual structures.

A structure supplies its simple elements (hashable values) and the lattice
operations on them; everything here only needs meets, complements, simple
products and conjugation by the Garside element.
"""

from __future__ import annotations

from typing import Generic, Hashable, Iterable, Sequence, TypeVar

S = TypeVar("S", bound=Hashable)


class GarsideStructure(Generic[S]):
    n: int

    def identity(self) -> S:
        raise NotImplementedError

    def garside(self) -> S:
        raise NotImplementedError

    def meet(self, a: S, b: S) -> S:
        raise NotImplementedError

    def mul(self, a: S, b: S) -> S:
        """``ab``, which the caller knows to be simple."""
        raise NotImplementedError

    def left_div(self, a: S, b: S) -> S:
        """``a^-1 b`` for ``a`` left dividing ``b``."""
        raise NotImplementedError

    def left_complement(self, a: S) -> S:
        """``a^-1 G``."""
        raise NotImplementedError

    def right_complement(self, a: S) -> S:
        """``G a^-1``."""
        raise NotImplementedError

    def tau(self, a: S, k: int = 1) -> S:
        """``G^-k a G^k``."""
        raise NotImplementedError

    def expand(self, word) -> Iterable[tuple[str, object]]:
        """Translate a braid word into ``("simple", s)``, ``("inverse", s)`` and ``("garside", k)`` steps."""
        raise NotImplementedError

    # -- normal form machinery

    def normalize_pair(self, a: S, b: S) -> tuple[S, S]:
        """Slide the largest possible prefix of ``b`` into ``a``."""
        key = (a, b)
        cache = self.__dict__.setdefault("_pair_cache", {})
        hit = cache.get(key)
        if hit is None:
            t = self.meet(self.left_complement(a), b)
            hit = (a, b) if t == self.identity() else (self.mul(a, t), self.left_div(t, b))
            cache[key] = hit
        return hit

    def is_left_weighted(self, a: S, b: S) -> bool:
        """Lattice definition: ``G meet (ab) == a``, i.e. ``(a^-1 G) meet b`` is trivial."""
        return self.meet(self.left_complement(a), b) == self.identity()

    def multiply_simple(self, p: int, factors: list[S], s: S) -> int:
        """Right multiply the normal form ``G^p factors`` by a simple ``s`` in place; returns new ``p``."""
        factors.append(s)
        i = len(factors) - 1
        while i > 0:
            a, b = self.normalize_pair(factors[i - 1], factors[i])
            if a == factors[i - 1] and b == factors[i]:
                break
            factors[i - 1], factors[i] = a, b
            i -= 1
        return self._strip(p, factors)

    def multiply_garside(self, p: int, factors: list[S], k: int) -> int:
        if k:
            factors[:] = [self.tau(f, k) for f in factors]
        return p + k

    def _strip(self, p: int, factors: list[S]) -> int:
        g, e = self.garside(), self.identity()
        lead = 0
        while lead < len(factors) and factors[lead] == g:
            lead += 1
        if lead:
            del factors[:lead]
        while factors and factors[-1] == e:
            factors.pop()
        return p + lead

    def normal_form_steps(self, steps: Iterable[tuple[str, object]]) -> tuple[int, list[S]]:
        p, factors = 0, []
        for kind, val in steps:
            if kind == "simple":
                p = self.multiply_simple(p, factors, val)
            elif kind == "inverse":
                p = self.multiply_garside(p, factors, -1)
                p = self.multiply_simple(p, factors, self.right_complement(val))
            elif kind == "garside":
                p = self.multiply_garside(p, factors, val)
            else:
                raise ValueError(f"unknown step {kind!r}")
        return p, factors

    def normalize_sequence(self, p: int, seq: Sequence[S]) -> tuple[int, list[S]]:
        """Normal form of ``G^p s_1 ... s_k`` for arbitrary simples ``s_i``."""
        factors: list[S] = []
        for s in seq:
            p = self.multiply_simple(p, factors, s)
        return p, factors
