"""Non-crossing partitions and diagonal-valued moment/cumulant transforms.

The bracket convention: a nested sub-partition's value right-multiplies
the argument to its left inside the enclosing block, and outer blocks
multiply left to right in the diagonal.  With that convention the
subtraction recursion

    k_n(a_1, ..., a_n) = E(a_1 ... a_n) - sum over proper non-crossing
    partitions of the nested lower brackets

inverts exactly, without Moebius coefficients.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ArityBoundError, DomainError
from .algebra import AlgebraElement, DiagonalElement

DEFAULT_NC_BOUND = 10
DEFAULT_ARITY_BOUND = 8


def catalan(k: int) -> int:
    """The k-th Catalan number C(2k, k) / (k + 1)."""
    if k < 0:
        raise DomainError("catalan numbers need k >= 0")
    return math.comb(2 * k, k) // (k + 1)


def _blocks_cross(b1, b2) -> bool:
    # Merge the two blocks and count label alternations; three or more
    # switches is exactly the a < b < c < d interleaving pattern.
    merged = sorted([(p, 0) for p in b1] + [(p, 1) for p in b2])
    switches = 0
    for i in range(1, len(merged)):
        if merged[i][1] != merged[i - 1][1]:
            switches += 1
    return switches >= 3


@dataclass(frozen=True)
class NCPartition:
    """A non-crossing partition of {1, ..., n}, blocks ordered by minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        last_min = 0
        for block in self.blocks:
            if not block:
                raise DomainError("empty block")
            if any(b <= a for a, b in zip(block, block[1:])):
                raise DomainError("block elements must increase")
            if block[0] <= last_min:
                raise DomainError("blocks must be ordered by their minima")
            last_min = block[0]
            seen.update(block)
        total = sum(len(block) for block in self.blocks)
        if seen != set(range(1, self.n + 1)) or total != self.n:
            raise DomainError(f"blocks do not partition 1..{self.n}")
        for b1, b2 in itertools.combinations(self.blocks, 2):
            if _blocks_cross(b1, b2):
                raise DomainError(f"crossing blocks: {b1} and {b2}")

    @property
    def is_full(self) -> bool:
        return len(self.blocks) == 1

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


@lru_cache(maxsize=None)
def _nc_of(positions: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    if not positions:
        return ((),)
    first, rest = positions[0], positions[1:]
    out = []
    for r in range(len(rest) + 1):
        for chosen in itertools.combinations(rest, r):
            head = (first,) + chosen
            in_head = set(chosen)
            remaining = [p for p in rest if p not in in_head]
            segments = []
            for i, lo in enumerate(head):
                hi = head[i + 1] if i + 1 < len(head) else None
                segments.append(
                    tuple(p for p in remaining if p > lo and (hi is None or p < hi))
                )
            for combo in itertools.product(*(_nc_of(seg) for seg in segments)):
                blocks = [head]
                for part in combo:
                    blocks.extend(part)
                blocks.sort(key=lambda b: b[0])
                out.append(tuple(blocks))
    return tuple(out)


@lru_cache(maxsize=None)
def _nc_partitions(n: int) -> tuple[NCPartition, ...]:
    return tuple(NCPartition(n, blocks) for blocks in _nc_of(tuple(range(1, n + 1))))


def enumerate_nc(n: int, *, bound: int = DEFAULT_NC_BOUND) -> tuple[NCPartition, ...]:
    """All non-crossing partitions of {1..n}; |result| is the n-th Catalan
    number.  Memoized per n behind the bound guard."""
    if n < 1:
        raise DomainError("non-crossing partitions need n >= 1")
    if n > bound:
        raise ArityBoundError(f"enumeration bound exceeded: {n} > {bound}")
    return _nc_partitions(n)


class CumulantSource:
    """Order-indexed brackets with diagonal values, fed to nested
    partition evaluation.

    Subclasses supply ``valuation(args)``; ``absorb(arg, diag)`` dresses
    an argument with a diagonal factor on the right, algebra
    multiplication by default.
    """

    def valuation(self, args) -> DiagonalElement:
        raise NotImplementedError

    def absorb(self, arg, diag: DiagonalElement):
        return arg * diag


def nested_evaluate(pi: NCPartition, args, source: CumulantSource) -> DiagonalElement:
    """Evaluate one non-crossing nesting of brackets.

    Outer blocks multiply left to right; inside a block, the value of the
    sub-partition nested in a gap right-multiplies the argument before
    the gap.
    """
    args = tuple(args)
    if len(args) != pi.n:
        raise DomainError(
            f"arity mismatch: partition of {pi.n}, {len(args)} arguments"
        )
    owner = {}
    for bi, block in enumerate(pi.blocks):
        for pos in block:
            owner[pos] = bi

    def eval_span(lo: int, hi: int) -> DiagonalElement:
        total = None
        pos = lo
        while pos <= hi:
            block = pi.blocks[owner[pos]]
            slots = []
            for t, b in enumerate(block):
                arg = args[b - 1]
                nxt = block[t + 1] if t + 1 < len(block) else None
                if nxt is not None and nxt > b + 1:
                    arg = source.absorb(arg, eval_span(b + 1, nxt - 1))
                slots.append(arg)
            val = source.valuation(tuple(slots))
            total = val if total is None else total * val
            if total.is_zero:
                return total
            pos = block[-1] + 1
        return total

    return eval_span(1, pi.n)


class CumulantFunctional(CumulantSource):
    """The cumulants of algebra elements, by the subtraction recursion.

    Values are memoized per argument tuple, so one functional instance
    shared across a scan avoids recomputing lower brackets.
    """

    def __init__(self, *, bound: int = DEFAULT_ARITY_BOUND):
        self.bound = bound
        self._memo: dict = {}

    def valuation(self, args) -> DiagonalElement:
        args = tuple(args)
        n = len(args)
        if n == 0:
            raise DomainError("empty argument tuple")
        if n > self.bound:
            raise ArityBoundError(f"bracket order {n} exceeds bound {self.bound}")
        graph = args[0].graph
        if any(a.is_zero for a in args):
            return DiagonalElement.zero(graph)
        cached = self._memo.get(args)
        if cached is not None:
            return cached
        prod = args[0]
        for a in args[1:]:
            prod = prod * a
            if prod.is_zero:
                break
        total = prod.expectation()
        if n > 1:
            for pi in enumerate_nc(n, bound=n):
                if pi.is_full:
                    continue
                total = total - nested_evaluate(pi, args, self)
        self._memo[args] = total
        return total


def moment_to_cumulant(
    args, *, bound: int = DEFAULT_ARITY_BOUND, functional: CumulantFunctional | None = None
) -> DiagonalElement:
    """k_n of a tuple of algebra elements."""
    f = functional if functional is not None else CumulantFunctional(bound=bound)
    return f.valuation(tuple(args))


def cumulant_to_moment(
    args, source: CumulantSource, *, bound: int = DEFAULT_ARITY_BOUND
) -> DiagonalElement:
    """Sum of all non-crossing nestings: restores E(a_1 ... a_n) when the
    source is the cumulant functional of the same elements."""
    args = tuple(args)
    n = len(args)
    if n == 0:
        raise DomainError("empty argument tuple")
    if n > bound:
        raise ArityBoundError(f"moment order {n} exceeds bound {bound}")
    total = None
    for pi in enumerate_nc(n, bound=n):
        val = nested_evaluate(pi, args, source)
        total = val if total is None else total + val
    return total


@dataclass(frozen=True)
class DressedTag:
    """Opaque argument for abstract sources, carrying the diagonal
    dressing accumulated from nested gaps."""

    tag: str
    right: DiagonalElement

    def __str__(self) -> str:
        return self.tag


def dressed_tags(graph, tags) -> tuple[DressedTag, ...]:
    unit = DiagonalElement.unit(graph)
    return tuple(DressedTag(t, unit) for t in tags)


class PairSource(CumulantSource):
    """Abstract bracket family whose only nonzero order is two: every
    pair evaluates to one fixed diagonal value times the dressings its
    slots accumulated."""

    def __init__(self, pair_value: DiagonalElement):
        self.pair_value = pair_value
        self.graph = pair_value.graph

    def valuation(self, args) -> DiagonalElement:
        if len(args) != 2:
            return DiagonalElement.zero(self.graph)
        out = self.pair_value
        for slot in args:
            out = out * slot.right
        return out

    def absorb(self, arg: DressedTag, diag: DiagonalElement) -> DressedTag:
        return DressedTag(arg.tag, arg.right * diag)


@dataclass(frozen=True)
class ScanFinding:
    order: int
    pattern: tuple[str, ...]
    value: DiagonalElement

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "pattern": list(self.pattern),
            "value": str(self.value),
            "coeffs": self.value.to_json_dict(),
        }


@dataclass(frozen=True)
class MixedScanReport:
    """All nonzero mixed cumulants between two families, up to an order."""

    family_a: tuple[str, ...]
    family_b: tuple[str, ...]
    max_order: int
    checked: int
    findings: tuple[ScanFinding, ...]

    @property
    def free_to_order(self) -> bool:
        return not self.findings

    def to_json_dict(self) -> dict:
        return {
            "family_a": list(self.family_a),
            "family_b": list(self.family_b),
            "max_order": self.max_order,
            "tuples_checked": self.checked,
            "nonzero": [f.to_json_dict() for f in self.findings],
            "free_to_order": self.free_to_order,
        }


def _adjoint_closure(family) -> list[AlgebraElement]:
    out: list[AlgebraElement] = []
    for a in family:
        if a not in out:
            out.append(a)
    for a in list(out):
        ad = a.adjoint()
        if ad not in out:
            out.append(ad)
    return out


def mixed_cumulant_scan(
    family_a,
    family_b,
    max_order: int,
    *,
    bound: int = DEFAULT_ARITY_BOUND,
    labels=None,
    functional: CumulantFunctional | None = None,
) -> MixedScanReport:
    """Evaluate every mixed cumulant over the adjoint closures of two
    families, orders 1..max_order, and report the nonzero ones.

    A tuple is mixed when at least one entry represents each family;
    without mixed tuples (an empty family) the report is empty.
    """
    if max_order > bound:
        raise ArityBoundError(f"scan order {max_order} exceeds bound {bound}")
    closed_a = _adjoint_closure(family_a)
    closed_b = _adjoint_closure(family_b)
    labels = dict(labels or {})

    def label(x: AlgebraElement) -> str:
        return labels.get(x, str(x))

    pool: list[AlgebraElement] = []
    flags: dict[AlgebraElement, list[bool]] = {}
    for x in closed_a:
        flags[x] = [True, False]
        pool.append(x)
    for x in closed_b:
        if x in flags:
            flags[x][1] = True
        else:
            flags[x] = [False, True]
            pool.append(x)

    f = functional if functional is not None else CumulantFunctional(bound=bound)
    findings = []
    checked = 0
    for n in range(1, max_order + 1):
        for tup in itertools.product(pool, repeat=n):
            if not (any(flags[x][0] for x in tup) and any(flags[x][1] for x in tup)):
                continue
            checked += 1
            val = f.valuation(tup)
            if not val.is_zero:
                findings.append(
                    ScanFinding(n, tuple(label(x) for x in tup), val)
                )
    return MixedScanReport(
        tuple(label(x) for x in closed_a),
        tuple(label(x) for x in closed_b),
        max_order,
        checked,
        tuple(findings),
    )
