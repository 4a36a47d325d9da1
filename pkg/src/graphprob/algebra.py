"""Exact linear combinations of generator normal forms.

Elements carry their graph and backend and stay canonical: terms sorted
by the monomial order, zero coefficients dropped.  Products route every
monomial pair through the backend reduction, so axiomatic elements never
hold a cancellable common final segment and fock elements never pretend
to act beyond their truncation depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BackendMismatchError, DepthError, DomainError
from .graphs import Graph, PathWord, parse_word
from .operators import (
    AXIOMATIC,
    Backend,
    GeneratorSymbol,
    Monomial,
    cancel_final_segment,
    compose,
    reduce_word,
)
from .scalars import ONE, Scalar

_ScalarLike = (Scalar, int, Fraction)


def _scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.of(x)
    raise TypeError(f"not a scalar: {x!r}")


@dataclass(frozen=True)
class DiagonalElement:
    """An element of the diagonal subalgebra: one scalar per vertex.

    Products, sums, and powers are pointwise; the diagonal is commutative.
    """

    graph: Graph
    coeffs: tuple[tuple[str, Scalar], ...]

    def __post_init__(self):
        last = None
        for v, c in self.coeffs:
            if v not in self.graph.vertices:
                raise DomainError(f"unknown vertex: {v}")
            if last is not None and v <= last:
                raise DomainError("diagonal coefficients must be sorted and unique")
            if c.is_zero:
                raise DomainError("diagonal coefficients must be nonzero")
            last = v

    @classmethod
    def make(cls, graph: Graph, mapping) -> "DiagonalElement":
        coerced = {v: _scalar(c) for v, c in dict(mapping).items()}
        items = tuple(
            (v, c) for v, c in sorted(coerced.items(), key=lambda vc: vc[0]) if not c.is_zero
        )
        return cls(graph, items)

    @classmethod
    def zero(cls, graph: Graph) -> "DiagonalElement":
        return cls(graph, ())

    @classmethod
    def unit(cls, graph: Graph) -> "DiagonalElement":
        return cls.make(graph, {v: ONE for v in graph.vertices})

    @classmethod
    def vertex_unit(cls, graph: Graph, v: str, coeff=ONE) -> "DiagonalElement":
        return cls.make(graph, {v: _scalar(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, v: str) -> Scalar:
        for u, c in self.coeffs:
            if u == v:
                return c
        return Scalar()

    def support(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.coeffs)

    def __add__(self, other: "DiagonalElement") -> "DiagonalElement":
        if self.graph != other.graph:
            raise BackendMismatchError("diagonal sum over different graphs")
        acc = dict(self.coeffs)
        for v, c in other.coeffs:
            acc[v] = acc.get(v, Scalar()) + c
        return DiagonalElement.make(self.graph, acc)

    def __sub__(self, other: "DiagonalElement") -> "DiagonalElement":
        return self + (-other)

    def __neg__(self) -> "DiagonalElement":
        return DiagonalElement(self.graph, tuple((v, -c) for v, c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, DiagonalElement):
            if self.graph != other.graph:
                raise BackendMismatchError("diagonal product over different graphs")
            return DiagonalElement.make(
                self.graph, {v: c * other.coeff(v) for v, c in self.coeffs}
            )
        if isinstance(other, AlgebraElement):
            return other._scale_left_diagonal(self)
        if isinstance(other, _ScalarLike):
            s = _scalar(other)
            return DiagonalElement.make(
                self.graph, {v: c * s for v, c in self.coeffs}
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _ScalarLike):
            return self * other
        return NotImplemented

    def power(self, k: int) -> "DiagonalElement":
        if k < 1:
            raise DomainError("pointwise power needs k >= 1")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def conjugate(self) -> "DiagonalElement":
        return DiagonalElement(
            self.graph, tuple((v, c.conjugate()) for v, c in self.coeffs)
        )

    def restrict(self, vertex_subset) -> "DiagonalElement":
        subset = set(vertex_subset)
        for v in subset:
            if v not in self.graph.vertices:
                raise DomainError(f"unknown vertex: {v}")
        return DiagonalElement(
            self.graph, tuple((v, c) for v, c in self.coeffs if v in subset)
        )

    def embed(self, backend: Backend) -> "AlgebraElement":
        return AlgebraElement.make(
            self.graph,
            backend,
            {Monomial.vertex(self.graph, v): c for v, c in self.coeffs},
        )

    def to_json_dict(self) -> dict:
        return {v: c.to_json() for v, c in self.coeffs}

    @staticmethod
    def from_json(graph: Graph, data: dict) -> "DiagonalElement":
        return DiagonalElement.make(
            graph, {v: Scalar.from_json(c) for v, c in data.items()}
        )

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"{c}*L[@{v}]" for v, c in self.coeffs)


@dataclass(frozen=True)
class Support:
    """Vertex and path words carrying nonzero coefficients."""

    vertex_support: tuple[str, ...]
    path_support: tuple[PathWord, ...]


@dataclass(frozen=True)
class AlgebraElement:
    """A finite linear combination of monomials under one backend."""

    graph: Graph
    backend: Backend
    terms: tuple[tuple[Monomial, Scalar], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_hash", hash((self.graph, self.backend, self.terms))
        )

    def __hash__(self):
        return self._hash

    @classmethod
    def make(cls, graph: Graph, backend: Backend, term_map) -> "AlgebraElement":
        acc: dict[Monomial, Scalar] = {}
        for m, c in dict(term_map).items():
            c = _scalar(c)
            if c.is_zero:
                continue
            if m.graph != graph:
                raise BackendMismatchError("term monomial from a different graph")
            if backend.kind == AXIOMATIC:
                m = cancel_final_segment(m)
            elif max(m.creation.length, m.annihilation.length) > backend.depth:
                raise DepthError(
                    max(m.creation.length, m.annihilation.length), backend.depth
                )
            acc[m] = acc.get(m, Scalar()) + c
        terms = tuple(
            (m, c)
            for m, c in sorted(acc.items(), key=lambda mc: mc[0].sort_key())
            if not c.is_zero
        )
        return cls(graph, backend, terms)

    @classmethod
    def zero(cls, graph: Graph, backend: Backend) -> "AlgebraElement":
        return cls(graph, backend, ())

    @classmethod
    def identity(cls, graph: Graph, backend: Backend) -> "AlgebraElement":
        return cls.make(
            graph, backend, {Monomial.vertex(graph, v): ONE for v in graph.vertices}
        )

    @classmethod
    def vertex_projection(cls, graph: Graph, backend: Backend, v: str) -> "AlgebraElement":
        return cls.make(graph, backend, {Monomial.vertex(graph, v): ONE})

    @classmethod
    def from_word(cls, graph, backend, symbols, coeff=ONE) -> "AlgebraElement":
        m = reduce_word(backend, symbols)
        if m is None:
            return cls.zero(graph, backend)
        return cls.make(graph, backend, {m: _scalar(coeff)})

    @classmethod
    def generator(cls, graph, backend, word: PathWord, starred: bool = False) -> "AlgebraElement":
        return cls.from_word(graph, backend, [GeneratorSymbol(word, starred)])

    @classmethod
    def symmetrized_generator(cls, graph, backend, word: PathWord) -> "AlgebraElement":
        """The self-adjoint combination L[w] + L*[w]."""
        return cls.generator(graph, backend, word) + cls.generator(
            graph, backend, word, starred=True
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, m: Monomial) -> Scalar:
        for mm, c in self.terms:
            if mm == m:
                return c
        return Scalar()

    def _check_compatible(self, other: "AlgebraElement"):
        if self.graph != other.graph:
            raise BackendMismatchError("elements live over different graphs")
        if self.backend != other.backend:
            raise BackendMismatchError(
                f"backend mismatch: {self.backend} vs {other.backend}"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_compatible(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, Scalar()) + c
        return AlgebraElement.make(self.graph, self.backend, acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(
            self.graph, self.backend, tuple((m, -c) for m, c in self.terms)
        )

    def scale(self, s) -> "AlgebraElement":
        s = _scalar(s)
        if s.is_zero:
            return AlgebraElement.zero(self.graph, self.backend)
        return AlgebraElement(
            self.graph, self.backend, tuple((m, c * s) for m, c in self.terms)
        )

    def _scale_left_diagonal(self, d: DiagonalElement) -> "AlgebraElement":
        if d.graph != self.graph:
            raise BackendMismatchError("diagonal from a different graph")
        acc = {}
        for m, c in self.terms:
            s = d.coeff(m.creation.initial)
            if not s.is_zero:
                acc[m] = s * c
        return AlgebraElement.make(self.graph, self.backend, acc)

    def _scale_right_diagonal(self, d: DiagonalElement) -> "AlgebraElement":
        if d.graph != self.graph:
            raise BackendMismatchError("diagonal from a different graph")
        acc = {}
        for m, c in self.terms:
            s = d.coeff(m.annihilation.initial)
            if not s.is_zero:
                acc[m] = c * s
        return AlgebraElement.make(self.graph, self.backend, acc)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_compatible(other)
            acc: dict[Monomial, Scalar] = {}
            fock = self.backend.is_fock
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    if fock:
                        need = m1.degree + m2.degree
                        if need > self.backend.depth:
                            raise DepthError(need, self.backend.depth)
                    m = compose(m1, m2)
                    if m is None:
                        continue
                    if not fock:
                        m = cancel_final_segment(m)
                    acc[m] = acc.get(m, Scalar()) + c1 * c2
            return AlgebraElement.make(self.graph, self.backend, acc)
        if isinstance(other, DiagonalElement):
            return self._scale_right_diagonal(other)
        if isinstance(other, _ScalarLike):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _ScalarLike):
            return self.scale(other)
        return NotImplemented

    def power(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise DomainError("negative powers are not defined")
        if k == 0:
            return AlgebraElement.identity(self.graph, self.backend)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def adjoint(self) -> "AlgebraElement":
        acc = {m.adjoint(): c.conjugate() for m, c in self.terms}
        return AlgebraElement.make(self.graph, self.backend, acc)

    def is_self_adjoint(self) -> bool:
        return self == self.adjoint()

    def expectation(self) -> DiagonalElement:
        """Compression onto the diagonal: keep the vertex-monomial terms.

        On the fock backend this equals the vertex-vector compression
        v -> <a xi_v, xi_v>; on the axiomatic backend monomials with equal
        nonvertex sides cannot survive reduction, so the reading is the
        same coefficient extraction.
        """
        acc = {}
        for m, c in self.terms:
            if m.is_vertex:
                acc[m.creation.initial] = c
        return DiagonalElement.make(self.graph, acc)

    def support(self) -> Support:
        verts = []
        paths = set()
        for m, _ in self.terms:
            if m.is_vertex:
                verts.append(m.creation.initial)
            else:
                if not m.creation.is_vertex:
                    paths.add(m.creation)
                if not m.annihilation.is_vertex:
                    paths.add(m.annihilation)
        return Support(
            tuple(sorted(verts)), tuple(sorted(paths, key=lambda w: w.key()))
        )

    def to_json_dict(self) -> dict:
        return {
            "backend": self.backend.to_json(),
            "terms": [
                {
                    "p": str(m.creation),
                    "q": str(m.annihilation),
                    **c.to_json(),
                }
                for m, c in self.terms
            ],
        }

    @staticmethod
    def from_json(graph: Graph, data: dict) -> "AlgebraElement":
        backend = Backend.from_json(data["backend"])
        acc: dict[Monomial, Scalar] = {}
        for t in data["terms"]:
            m = Monomial(parse_word(graph, t["p"]), parse_word(graph, t["q"]))
            c = Scalar.from_json(t)
            acc[m] = acc.get(m, Scalar()) + c
        return AlgebraElement.make(graph, backend, acc)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"{c}*{m.display()}" for m, c in self.terms)


def expectation(a: AlgebraElement) -> DiagonalElement:
    return a.expectation()


def support(a: AlgebraElement) -> Support:
    return a.support()


def restrict_diagonal(d: DiagonalElement, vertex_subset) -> DiagonalElement:
    return d.restrict(vertex_subset)


@dataclass(frozen=True)
class FaithfulnessRow:
    element: str
    expectation_value: str
    expectation_is_zero: bool
    element_is_zero: bool
    counterexample: bool


@dataclass(frozen=True)
class FaithfulnessReport:
    """Outcome of probing E(a* a) = 0 => a = 0 on a sample list."""

    backend: str
    rows: tuple[FaithfulnessRow, ...]
    counterexamples: tuple[str, ...]

    @property
    def faithful_on_samples(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "backend": self.backend,
            "rows": [
                {
                    "element": r.element,
                    "expectation": r.expectation_value,
                    "expectation_is_zero": r.expectation_is_zero,
                    "element_is_zero": r.element_is_zero,
                    "counterexample": r.counterexample,
                }
                for r in self.rows
            ],
            "counterexamples": list(self.counterexamples),
            "faithful_on_samples": self.faithful_on_samples,
        }


def faithfulness_probe(graph: Graph, backend: Backend, samples) -> FaithfulnessReport:
    """Evaluate E(a* a) for each sample and flag vanishing witnesses."""
    rows = []
    bad = []
    for a in samples:
        val = (a.adjoint() * a).expectation()
        hit = val.is_zero and not a.is_zero
        rows.append(
            FaithfulnessRow(str(a), str(val), val.is_zero, a.is_zero, hit)
        )
        if hit:
            bad.append(str(a))
    return FaithfulnessReport(str(backend), tuple(rows), tuple(bad))
