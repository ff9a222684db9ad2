"""Vector secret sharing from a matroid representation.

The code is the row space of the representation matrix.  A codeword u*M
with coordinate p_o equal to the secret is chosen by the caller (this module
never draws randomness) and player x receives coordinate x.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, QualifiedSet, ScaleLimitError, SharingError, UnqualifiedSet
from .ff import FieldElement, FieldMatrix, solve
from .ff.linalg import raw_rank
from .representation import Representation

CODEWORD_LIMIT = 10**6

ShareVector = dict[int, FieldElement]


@dataclass(frozen=True)
class SharingScheme:
    representation: Representation
    dealer: int = 1

    def __post_init__(self):
        rep = self.representation
        if not 1 <= self.dealer <= rep.cols:
            raise SharingError(f"dealer index {self.dealer} outside 1..{rep.cols}")
        if all(rep.field.is_zero(v) for v in rep.matrix.column(self.dealer - 1)):
            raise SharingError(f"dealer column {self.dealer} is zero (a loop)")

    @property
    def field(self):
        return self.representation.field

    @property
    def players(self) -> tuple[int, ...]:
        return tuple(x for x in range(1, self.representation.cols + 1) if x != self.dealer)

    def _column(self, x: int) -> tuple:
        return self.representation.matrix.column(x - 1)

    def _check_players(self, xs: Iterable[int]) -> list[int]:
        xs = sorted(set(xs))
        bad = [x for x in xs if x not in self.players]
        if bad:
            raise SharingError(f"{bad} are not players")
        return xs


def codeword(scheme: SharingScheme, coefficients: Sequence) -> list:
    """Raw coordinates of u * M."""
    F = scheme.field
    rows = scheme.representation.matrix.rows
    if len(coefficients) != len(rows):
        raise DimensionMismatch(f"need {len(rows)} coefficients, got {len(coefficients)}")
    u = [F.coerce(c) for c in coefficients]
    out = []
    for x in range(scheme.representation.cols):
        acc = F.raw_zero
        for ui, row in zip(u, rows):
            if not F.is_zero(ui) and not F.is_zero(row[x]):
                acc = F.add(acc, F.mul(ui, row[x]))
        out.append(acc)
    return out


def coefficients_for(scheme: SharingScheme, secret, free: Sequence) -> list[FieldElement]:
    """Coefficients u with (u M)_{p_o} = secret, from r - 1 caller-chosen values.

    The free values fill every coordinate except the first row where the
    dealer column is nonzero; that coordinate is then solved for.
    """
    F = scheme.field
    col = scheme._column(scheme.dealer)
    if len(free) != len(col) - 1:
        raise DimensionMismatch(f"need {len(col) - 1} free values, got {len(free)}")
    k = next(i for i, v in enumerate(col) if not F.is_zero(v))
    vals = [F.coerce(v) for v in free]
    u = vals[:k] + [F.raw_zero] + vals[k:]
    acc = F.coerce(secret)
    for i, (ui, ci) in enumerate(zip(u, col)):
        if i != k:
            acc = F.sub(acc, F.mul(ui, ci))
    u[k] = F.mul(acc, F.inv(col[k]))
    return [FieldElement(F, v) for v in u]


def deal(scheme: SharingScheme, secret, coefficients: Sequence, players: Iterable[int] | None = None) -> ShareVector:
    F = scheme.field
    word = codeword(scheme, coefficients)
    if word[scheme.dealer - 1] != F.coerce(secret):
        raise SharingError("coefficients do not encode the given secret")
    xs = scheme.players if players is None else scheme._check_players(players)
    return {x: FieldElement(F, word[x - 1]) for x in xs}


def is_qualified(scheme: SharingScheme, players: Iterable[int]) -> bool:
    """Whether the dealer column lies in the span of the players' columns."""
    xs = scheme._check_players(players)
    if not xs:
        return False
    F = scheme.field
    rows = scheme.representation.matrix.rows
    sub = [[row[x - 1] for x in xs] for row in rows]
    withd = [s + [row[scheme.dealer - 1]] for s, row in zip(sub, rows)]
    return raw_rank(F, sub, len(xs)) == raw_rank(F, withd, len(xs) + 1)


def recombination(scheme: SharingScheme, players: Iterable[int]) -> dict[int, FieldElement]:
    """lambda with sum_x lambda_x * column_x = dealer column, or UnqualifiedSet."""
    xs = scheme._check_players(players)
    rep = scheme.representation
    if not xs:
        raise UnqualifiedSet("share set is not qualified")
    sub = rep.matrix.columns([x - 1 for x in xs])
    lam = solve(sub, rep.matrix.column(scheme.dealer - 1))
    if lam is None:
        raise UnqualifiedSet("share set is not qualified")
    return dict(zip(xs, lam))


def reconstruct(scheme: SharingScheme, shares: Mapping[int, FieldElement]) -> FieldElement:
    lam = recombination(scheme, shares)
    F = scheme.field
    acc = F.raw_zero
    for x, l in lam.items():
        acc = F.add(acc, F.mul(l.value, F.coerce(shares[x])))
    return FieldElement(F, acc)


def maximal_unqualified_sets(scheme: SharingScheme) -> list[tuple[int, ...]]:
    players = scheme.players
    unq = [frozenset(c) for k in range(len(players) + 1) for c in itertools.combinations(players, k) if not is_qualified(scheme, c)]
    return [tuple(sorted(s)) for s in unq if not any(s < t for t in unq)]


def privacy_check(scheme: SharingScheme, players: Iterable[int], limit: int = CODEWORD_LIMIT) -> bool:
    """Exhaustive perfect-privacy test for an unqualified set.

    Over all q^r codewords, the multiset of share vectors seen by ``players``
    must be the same for every secret.
    """
    xs = scheme._check_players(players)
    if is_qualified(scheme, xs):
        raise QualifiedSet(f"{xs} is qualified")
    F = scheme.field
    r = scheme.representation.rows
    if F.order**r > limit:
        raise ScaleLimitError(f"{F.order}^{r} codewords exceed the enumeration limit {limit}")
    seen: dict[object, Counter] = {}
    for u in itertools.product(list(F.raw_elements()), repeat=r):
        word = codeword(scheme, u)
        seen.setdefault(word[scheme.dealer - 1], Counter())[tuple(word[x - 1] for x in xs)] += 1
    views = list(seen.values())
    return len(seen) == F.order and all(v == views[0] for v in views)
