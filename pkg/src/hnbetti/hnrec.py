"""Semistable-locus recursion and Betti numbers of the stable-bundle moduli space.

The Poincare series of the whole rank-r degree-n matrix-divisor ind-variety
splits over the Harder-Narasimhan stratification:

    P(Div; t) = P(Div^ss; t) + sum over proper types P of  P(S_P; t) t^(2 codim_P),

and each stratum series is the product of the semistable series of its pieces:

    P(S_P; t) = prod_j P(Div^(r'_j, d'_j)^ss; t).

Solving for the semistable part gives the recursion implemented by ss_series:
subtract, from the closed-form series of the ind-variety, the shifted stratum
series of every proper type whose doubled codimension fits under the truncation
order.  Pieces have strictly smaller rank, and rank 1 has no proper strata, so
the recursion grounds.  When gcd(r, n) = 1 semistable equals stable and the
moduli space N(r, n) of stable bundles has Poincare polynomial

    P(N(r, n); t) = (1 - t^2) * P(Div^ss; t),

a polynomial of degree 2 dim with dim = 1 + r^2 (g - 1).  betti_poly performs
that multiplication, checks that the series really does collapse (vanishing
tail, exact degree, palindromic, nonnegative), and refuses to emit anything
when a check fails.

rank2_oracle is a deliberately separate route for rank 2 and odd degree: there
the strata are indexed by a single integer and the shifted sum is a geometric
series, so the semistable series has the closed form

    P(Div^(2)) - P(Div^(1))^2 * t^(2g) / (1 - t^4),

built here from raw polynomial arithmetic with no stratum enumeration and no
recursion, which makes it an independent witness for the main path.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .exactalg import ExactPolynomial, TruncatedSeries
from .genfun import CurveContext, div_stable_series
from .strata import HNType, enumerate_types, stratum_codim

TRUNCATION_SLACK = 10


class StructuralCheckError(RuntimeError):
    """A mathematical invariant that must hold was violated; output is withheld."""

    def __init__(self, message: str, diagnostic: Optional[dict] = None):
        super().__init__(message)
        self.diagnostic = dict(diagnostic or {})


@dataclass(frozen=True)
class ModuliQuery:
    """Parameters of one semistable-series or Betti request."""

    genus: int
    rank: int
    degree: int
    truncation: Optional[int] = None

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError(f"the recursion needs genus >= 1, got {self.genus}")
        if self.rank < 1:
            raise ValueError(f"rank must be at least 1, got {self.rank}")
        if self.truncation is not None and self.truncation < 0:
            raise ValueError(f"truncation order must be nonnegative, got {self.truncation}")


@dataclass(frozen=True)
class BettiChecks:
    """Outcome of the four structural checks on a Betti polynomial."""

    tail_vanishes: bool
    degree_matches_2dim: bool
    palindromic: bool
    nonnegative: bool

    def all_pass(self) -> bool:
        return (
            self.tail_vanishes
            and self.degree_matches_2dim
            and self.palindromic
            and self.nonnegative
        )


@dataclass(frozen=True)
class BettiReport:
    """A verified Betti polynomial with its context.  checks is None when skipped."""

    polynomial: ExactPolynomial
    moduli_dimension: int
    truncation_used: int
    checks: Optional[BettiChecks]


class MemoStore:
    """Memoized semistable series, keyed by (genus, rank, degree).

    One entry per key holds the longest series computed so far; shorter
    requests are served by truncation.  Writes are serialized and idempotent:
    re-storing a value that agrees on the common prefix is a no-op (the longer
    one is kept), while a disagreeing value raises StructuralCheckError, since
    two runs of an exact computation can never legitimately differ.

    With a cache directory set, every newly computed series is also written to
    ``ss_g{genus}_r{rank}_n{degree}_T{order}.json`` (atomic rename), and
    lookups fall back to any on-disk file with the same key and a truncation
    order at least as large.  Unreadable or inconsistent files are treated as
    misses; a note is appended to ``warnings`` for each.
    """

    def __init__(self, cache_dir: Union[str, Path, None] = None):
        self._lock = threading.Lock()
        self._entries: dict[tuple[int, int, int], TruncatedSeries] = {}
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self.warnings: list[str] = []

    def lookup(
        self, genus: int, rank: int, degree: int, order: int
    ) -> Optional[TruncatedSeries]:
        with self._lock:
            entry = self._entries.get((genus, rank, degree))
        if entry is not None and entry.truncation_order >= order:
            return entry.truncate(order)
        if self.cache_dir is not None:
            loaded = self._load_file(genus, rank, degree, order)
            if loaded is not None:
                self._merge((genus, rank, degree), loaded)
                return loaded.truncate(order)
        return None

    def store(self, genus: int, rank: int, degree: int, series: TruncatedSeries) -> None:
        grew = self._merge((genus, rank, degree), series)
        if grew and self.cache_dir is not None:
            self._write_file(genus, rank, degree, series)

    def _merge(self, key: tuple[int, int, int], series: TruncatedSeries) -> bool:
        """Install series under key; returns whether it added new coefficients."""
        with self._lock:
            existing = self._entries.get(key)
            if existing is not None:
                if not existing.agrees_with(series):
                    order = min(existing.truncation_order, series.truncation_order)
                    bad = next(
                        i
                        for i in range(order + 1)
                        if existing.coefficients[i] != series.coefficients[i]
                    )
                    raise StructuralCheckError(
                        "conflicting series stored for one key; exact results "
                        "must never differ",
                        {
                            "genus": key[0],
                            "rank": key[1],
                            "degree": key[2],
                            "first_mismatch_index": bad,
                            "existing_coefficient": existing.coefficients[bad],
                            "new_coefficient": series.coefficients[bad],
                        },
                    )
                if existing.truncation_order >= series.truncation_order:
                    return False
            self._entries[key] = series
            return True

    def _file_name(self, genus: int, rank: int, degree: int, order: int) -> str:
        return f"ss_g{genus}_r{rank}_n{degree}_T{order}.json"

    def _load_file(
        self, genus: int, rank: int, degree: int, order: int
    ) -> Optional[TruncatedSeries]:
        from .render import parse_json  # deferred: render depends on this module

        prefix = f"ss_g{genus}_r{rank}_n{degree}_T"
        candidates = []
        try:
            names = [p.name for p in self.cache_dir.glob(prefix + "*.json")]
        except OSError as exc:
            self.warnings.append(f"cache directory unreadable: {exc}")
            return None
        for name in names:
            stem = name[len(prefix) : -len(".json")]
            try:
                candidates.append((int(stem), name))
            except ValueError:
                self.warnings.append(f"cache file {name}: unparsable truncation order")
        for file_order, name in sorted(candidates, reverse=True):
            if file_order < order:
                break
            path = self.cache_dir / name
            try:
                doc = parse_json(path.read_text(encoding="utf-8"))
                if doc.kind != "series":
                    raise ValueError(f"unexpected document kind {doc.kind!r}")
                if (doc.genus, doc.rank, doc.degree) != (genus, rank, degree):
                    raise ValueError("document metadata does not match its file name")
                series = doc.payload
                if series.truncation_order != file_order:
                    raise ValueError("truncation order does not match the file name")
                return series
            except (OSError, ValueError, KeyError, TypeError) as exc:
                self.warnings.append(f"cache file {name}: {exc}")
        return None

    def _write_file(
        self, genus: int, rank: int, degree: int, series: TruncatedSeries
    ) -> None:
        from .render import OutputDocument, render_json

        doc = OutputDocument(
            kind="series", payload=series, genus=genus, rank=rank, degree=degree
        )
        name = self._file_name(genus, rank, degree, series.truncation_order)
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            tmp = self.cache_dir / f".{name}.tmp"
            tmp.write_text(render_json(doc) + "\n", encoding="utf-8")
            tmp.replace(self.cache_dir / name)
        except OSError as exc:
            self.warnings.append(f"cache file {name}: write failed: {exc}")


def dim_moduli(genus: int, rank: int) -> int:
    """Dimension of the moduli space of stable bundles: 1 + rank^2 (genus - 1)."""
    if genus < 1:
        raise ValueError("the moduli space needs genus >= 1")
    if rank < 1:
        raise ValueError("rank must be at least 1")
    return 1 + rank * rank * (genus - 1)


def ss_series(query: ModuliQuery, memo: Optional[MemoStore] = None) -> TruncatedSeries:
    """Poincare series of the semistable locus, to the query's truncation order.

    Closed-form ind-variety series minus the shifted stratum series of every
    proper type whose doubled codimension fits under the truncation order.
    """
    if query.truncation is None:
        raise ValueError("ss_series needs an explicit truncation order")
    if memo is None:
        memo = MemoStore()
    genus, rank, degree, order = (
        query.genus,
        query.rank,
        query.degree,
        query.truncation,
    )
    hit = memo.lookup(genus, rank, degree, order)
    if hit is not None:
        return hit
    series = div_stable_series(CurveContext(genus), rank, order)
    # Sorted by ascending codimension, so each piece is first needed at its
    # largest truncation order and later lookups are memo hits.
    for hn_type in enumerate_types(rank, degree, genus, order // 2):
        shift = 2 * stratum_codim(hn_type, genus)
        sub = stratum_series(genus, hn_type, order - shift, memo)
        series = series - sub.times_t_power(shift)
    memo.store(genus, rank, degree, series)
    return series


def stratum_series(
    genus: int,
    hn_type: HNType,
    order: int,
    memo: Optional[MemoStore] = None,
) -> TruncatedSeries:
    """Poincare series of one stratum: the product over its pieces' semistable series."""
    if memo is None:
        memo = MemoStore()
    out = TruncatedSeries.one(order)
    for piece_rank, piece_degree in hn_type.pieces:
        piece = ss_series(
            ModuliQuery(genus, piece_rank, piece_degree, order), memo
        )
        out = out * piece
    return out


def betti_poly(
    query: ModuliQuery,
    memo: Optional[MemoStore] = None,
    verify: bool = True,
) -> BettiReport:
    """Betti polynomial of the moduli space of stable bundles, fully checked.

    Requires gcd(rank, degree) = 1, so that stability and semistability agree.
    The truncation order defaults to 2*dim + TRUNCATION_SLACK and may not be
    smaller than 2*dim, the degree of the answer.  With verify=True (the
    default) the four structural checks must pass or StructuralCheckError is
    raised with a diagnostic dump; verify=False skips the checks entirely and
    the report carries checks=None.
    """
    if math.gcd(query.rank, query.degree) != 1:
        raise ValueError(
            "rank and degree must be coprime "
            f"(gcd({query.rank}, {query.degree}) = {math.gcd(query.rank, query.degree)}); "
            "otherwise stable and semistable bundles differ"
        )
    dim = dim_moduli(query.genus, query.rank)
    order = query.truncation if query.truncation is not None else 2 * dim + TRUNCATION_SLACK
    if order < 2 * dim:
        raise ValueError(
            f"truncation order {order} cannot hold the degree-{2 * dim} Betti polynomial"
        )
    semistable = ss_series(
        ModuliQuery(query.genus, query.rank, query.degree, order), memo
    )
    collapsed = semistable * ExactPolynomial.from_terms({0: 1, 2: -1})
    poly = collapsed.polynomial_prefix(2 * dim)
    if not verify:
        return BettiReport(poly, dim, order, None)

    tail = collapsed.coefficients[2 * dim + 1 :]
    checks = BettiChecks(
        tail_vanishes=not any(tail),
        degree_matches_2dim=poly.degree == 2 * dim,
        palindromic=(not poly.is_zero()) and poly.is_palindromic(),
        nonnegative=all(c >= 0 for c in poly.coefficients),
    )
    if not checks.all_pass():
        failed = [
            name
            for name in ("tail_vanishes", "degree_matches_2dim", "palindromic", "nonnegative")
            if not getattr(checks, name)
        ]
        diagnostic = {
            "genus": query.genus,
            "rank": query.rank,
            "degree": query.degree,
            "truncation": order,
            "dimension": dim,
            "failed_checks": failed,
            "coefficients": list(collapsed.coefficients),
        }
        if not checks.tail_vanishes:
            diagnostic["first_nonzero_tail_index"] = 2 * dim + 1 + next(
                i for i, c in enumerate(tail) if c
            )
        raise StructuralCheckError(
            "Betti polynomial failed structural checks: " + ", ".join(failed),
            diagnostic,
        )
    return BettiReport(poly, dim, order, checks)


def rank2_oracle(genus: int, degree: int, order: int) -> TruncatedSeries:
    """Closed-form rank-2 semistable series for odd degree; no recursion involved.

    For odd degree the strata are the line-bundle splittings (1, d)(1, n - d)
    with 2d > n, with codimensions g, g + 2, g + 4, ...; their shifted sum is
    P(Div^(1))^2 times a geometric series in t^4 starting at t^(2g).  The
    degree only enters through its parity, which is why a single closed form
    covers every odd n.
    """
    if genus < 1:
        raise ValueError("the oracle needs genus >= 1")
    if degree % 2 == 0:
        raise ValueError(f"the rank-2 closed form needs odd degree, got {degree}")
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    g2 = 2 * genus
    one_plus_t = ExactPolynomial.from_terms({0: 1, 1: 1})
    one_plus_t3 = ExactPolynomial.from_terms({0: 1, 3: 1})
    one_minus_t2 = ExactPolynomial.from_terms({0: 1, 2: -1})
    one_minus_t4 = ExactPolynomial.from_terms({0: 1, 4: -1})

    inv_t2 = one_minus_t2.inverse_series(order)
    whole = (
        one_minus_t4.inverse_series(order)
        * inv_t2
        * inv_t2
        * (one_plus_t ** g2 * one_plus_t3 ** g2)
    )
    if order < g2:
        return whole
    sub_order = order - g2
    line = one_minus_t2.inverse_series(sub_order) * one_plus_t ** g2
    strata_sum = line * line * one_minus_t4.inverse_series(sub_order)
    return whole - strata_sum.times_t_power(g2)
