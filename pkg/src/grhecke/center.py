"""
The center of H_n and its Geck-Rouquier basis.

Among central elements, the class element gamma_lam(n) for a modified cycle
type lam (with sum(lam) + len(lam) <= n) is pinned down by two properties:

  (i)  at x = 0 it becomes the plain class sum of C_lam(n);
  (ii) subtracting the sum of T_w over the class leaves an element whose
       support avoids the minimal length elements of every conjugacy class.

Equivalently, gamma_lam has coefficient 1 on every minimal length element
of its own class and coefficient 0 on every minimal length element of every
other class. Since monomial symmetric polynomials in the Jucys-Murphy
elements span the relevant filtration layer of the center, each gamma_lam
is found by solving, over the rational function field, for a combination of
m_mu (|mu| <= |lam|) whose coefficients at the canonical minimal
representatives realize the identity pattern. Any solution assembles to the
same element; the assembled coefficients are checked to land back in Z[x],
and the characterization is re-verified in full before an element is
accepted.

Structure constants come from expanding a product of two class elements in
this basis, which only requires reading coefficients at the canonical
minimal representatives and confirming that the reconstruction residual is
exactly zero.
"""

from __future__ import annotations

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import coxeter, hecke
from .coxeter import Partition, check_partition, fits_rank, min_rep
from .errors import (
    BasisIncompleteError, ConstructionError, ExactDivisionError,
    InvalidInputError, InvariantViolationError, SingularSystemError,
)
from .hecke import HeckeElt, group_mul, is_central, m_sym, mul
from .polyring import IntPoly, divexact, poly_lcm, solve_linear

__all__ = [
    "CentralCoords", "GammaBasis", "StructTable", "CheckReport",
    "gamma_element", "gamma_basis", "load_or_compute_gamma_basis",
    "set_cache_dir", "expand_in_gamma", "structure_constants",
    "m_sym_in_gamma", "class_sum_oracle", "build_struct_table",
    "verify_structure_constants", "verify_gamma_characterization",
    "verify_zero_specialization", "verify_elementary_sums",
    "check_entry_clauses",
]

_ONE = IntPoly.const(1)


@dataclass
class CentralCoords:
    """A central element written in the class-element basis."""

    n: int
    coords: dict[Partition, IntPoly]

    def __post_init__(self):
        for lam in self.coords:
            if not fits_rank(lam, self.n):
                raise InvalidInputError(
                    f"class {lam} vanishes in S_{self.n} and may not carry a coordinate"
                )

    def get(self, lam: Partition) -> IntPoly:
        return self.coords.get(lam, IntPoly())

    def items_canonical(self) -> list[tuple[Partition, IntPoly]]:
        """Entries sorted by size ascending, reverse-lex within a size."""
        order = {p: i for i, p in enumerate(coxeter.partitions_up_to(
            max((sum(p) for p in self.coords), default=0)))}
        return sorted(self.coords.items(), key=lambda kv: order[kv[0]])

    def specialize_zero(self) -> dict[Partition, int]:
        out = {}
        for lam, c in self.coords.items():
            v = c.constant_term()
            if v:
                out[lam] = v
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, CentralCoords):
            return self.n == other.n and self.coords == other.coords
        return NotImplemented


@dataclass
class GammaBasis:
    """Class elements gamma_lam(n) for all valid lam with |lam| <= up_to."""

    n: int
    up_to: int
    gamma: dict[Partition, HeckeElt]

    def valid_partitions(self) -> list[Partition]:
        return [p for p in coxeter.partitions_up_to(self.up_to) if p in self.gamma]


@dataclass
class StructTable:
    """All products gamma_lam * gamma_mu with |lam| + |mu| <= max_size."""

    n: int
    max_size: int
    entries: list[tuple[Partition, Partition, CentralCoords]]


@dataclass
class CheckReport:
    """Outcome of one verification suite."""

    name: str
    checks: int = 0
    witnesses: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.witnesses


# process-wide memo of built-and-verified elements, plus optional disk cache
_gamma_memo: dict[tuple[Partition, int], HeckeElt] = {}
_verified_bases: set[tuple[int, int]] = set()
_disk_cache_dir: Optional[Path] = None


def set_cache_dir(path) -> None:
    """Point the on-disk basis cache at `path` (None disables it)."""
    global _disk_cache_dir
    _disk_cache_dir = Path(path) if path is not None else None


def clear_caches() -> None:
    """Drop the in-process memos (used when testing the disk cache)."""
    _gamma_memo.clear()
    _verified_bases.clear()
    _struct_memo.clear()


def _candidate_classes(size: int, n: int) -> list[Partition]:
    return [p for p in coxeter.partitions_up_to(size) if fits_rank(p, n)]


def _solve_gamma(lam: Partition, n: int) -> HeckeElt:
    """Solve the characterization constraints for gamma_lam(n)."""
    size = sum(lam)
    candidates = list(coxeter.partitions_up_to(size))
    msyms = {mu: m_sym(mu, n) for mu in candidates}
    classes = _candidate_classes(size, n)
    reps = {nu: min_rep(nu, n) for nu in classes}
    A = [[msyms[mu].coeff(reps[nu]) for mu in candidates] for nu in classes]
    b = [_ONE if nu == lam else IntPoly() for nu in classes]
    try:
        sol = solve_linear(A, b, allow_underdetermined=True)
    except SingularSystemError as exc:
        raise ConstructionError(
            f"characterization system for gamma_{lam}(n={n}) is unsolvable: {exc}"
        ) from exc
    # assemble over a common denominator and insist the result is in Z[x]
    nonzero = [(mu, c) for mu, c in zip(candidates, sol) if c]
    denom = _ONE
    for _, c in nonzero:
        denom = poly_lcm(denom, c.den)
    num = hecke.zero(n)
    for mu, c in nonzero:
        num = num + msyms[mu].scale(c.num * divexact(denom, c.den))
    if denom == _ONE:
        return num
    terms = {}
    for w, c in num.terms.items():
        try:
            terms[w] = divexact(c, denom)
        except ExactDivisionError as exc:
            raise ConstructionError(
                f"gamma_{lam}(n={n}): coefficient of T_{w} is not in Z[x]"
            ) from exc
    return HeckeElt._raw(n, terms)


def _characterization_witnesses(
    lam: Partition, n: int, elt: HeckeElt, up_to: int
) -> tuple[list[str], int]:
    """Check centrality, the x=0 class sum, and the minimal-element pattern."""
    witnesses = []
    checks = 1
    if not is_central(elt):
        witnesses.append(f"gamma_{lam}(n={n}) is not central")
    checks += 1
    expected = {w: 1 for w in coxeter.conjugacy_class(lam, n)}
    if elt.specialize_group() != expected:
        witnesses.append(f"gamma_{lam}(n={n}) does not specialize to the class sum at x=0")
    for nu in _candidate_classes(up_to, n):
        want = _ONE if nu == lam else IntPoly()
        for w in coxeter.minimal_length_elements(nu, n):
            checks += 1
            if elt.coeff(w) != want:
                witnesses.append(
                    f"gamma_{lam}(n={n}) has coefficient {elt.coeff(w)} on the "
                    f"minimal element {w} of class {nu} (expected {want})"
                )
    checks += 1
    if elt and elt.homogeneous_parity() != sum(lam) % 2:
        witnesses.append(f"gamma_{lam}(n={n}) is not homogeneous of parity |lam| mod 2")
    return witnesses, checks


def gamma_element(lam: Partition, n: int) -> HeckeElt:
    """
    The class element gamma_lam(n); the zero element when the class
    vanishes in S_n. Elements are verified on first construction.
    """
    lam = check_partition(lam)
    if n < 1:
        raise InvalidInputError(f"rank must be positive, got {n}")
    if not fits_rank(lam, n):
        return hecke.zero(n)
    key = (lam, n)
    cached = _gamma_memo.get(key)
    if cached is not None:
        return cached
    elt = _solve_gamma(lam, n)
    witnesses, _ = _characterization_witnesses(lam, n, elt, sum(lam))
    if witnesses:
        raise ConstructionError("; ".join(witnesses))
    _gamma_memo[key] = elt
    return elt


def _cache_path(n: int, up_to: int) -> Optional[Path]:
    if _disk_cache_dir is None:
        return None
    return _disk_cache_dir / f"gamma_n{n}_upto{up_to}.json"


def _basis_pattern_ok(basis: GammaBasis) -> bool:
    """Cheap load-time validation: the identity pattern at canonical reps."""
    classes = _candidate_classes(basis.up_to, basis.n)
    reps = {nu: min_rep(nu, basis.n) for nu in classes}
    for lam, elt in basis.gamma.items():
        for nu, rep in reps.items():
            want = _ONE if nu == lam else IntPoly()
            if elt.coeff(rep) != want:
                return False
    return True


def _load_basis(path: Path, n: int, up_to: int) -> Optional[GammaBasis]:
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("format") != 1 or data.get("n") != n or data.get("up_to") != up_to:
        return None
    try:
        gamma = {
            tuple(int(p) for p in entry["lambda"]): HeckeElt.from_json_dict(entry["elt"])
            for entry in data["gamma"]
        }
    except (KeyError, InvalidInputError, ValueError):
        return None
    basis = GammaBasis(n=n, up_to=up_to, gamma=gamma)
    expected = {p for p in coxeter.partitions_up_to(up_to) if fits_rank(p, n)}
    if set(gamma) != expected or not _basis_pattern_ok(basis):
        return None
    return basis


def _save_basis(basis: GammaBasis) -> None:
    path = _cache_path(basis.n, basis.up_to)
    if path is None:
        return
    payload = {
        "format": 1,
        "n": basis.n,
        "up_to": basis.up_to,
        "gamma": [
            {"lambda": list(lam), "elt": basis.gamma[lam].to_json_dict()}
            for lam in basis.valid_partitions()
        ],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def gamma_basis(n: int, up_to: int) -> GammaBasis:
    """
    Materialize the class elements for all valid lam with |lam| <= up_to,
    asserting the full characterization for each.
    """
    if n < 1 or up_to < 0:
        raise InvalidInputError(f"bad basis request n={n}, up_to={up_to}")
    path = _cache_path(n, up_to)
    if (n, up_to) in _verified_bases:
        basis = GammaBasis(n=n, up_to=up_to, gamma={
            lam: gamma_element(lam, n)
            for lam in coxeter.partitions_up_to(up_to)
            if fits_rank(lam, n)
        })
        if path is not None and not path.exists():
            _save_basis(basis)
        return basis
    if path is not None:
        loaded = _load_basis(path, n, up_to)
        if loaded is not None:
            for lam, elt in loaded.gamma.items():
                _gamma_memo.setdefault((lam, n), elt)
            _verified_bases.add((n, up_to))
            return loaded
    gamma = {
        lam: gamma_element(lam, n)
        for lam in coxeter.partitions_up_to(up_to)
        if fits_rank(lam, n)
    }
    basis = GammaBasis(n=n, up_to=up_to, gamma=gamma)
    # gamma_element verified each element against classes of its own size;
    # re-check the identity pattern against every materialized size
    for lam, elt in gamma.items():
        witnesses, _ = _characterization_witnesses(lam, n, elt, up_to)
        if witnesses:
            raise ConstructionError("; ".join(witnesses))
    _verified_bases.add((n, up_to))
    _save_basis(basis)
    return basis


def load_or_compute_gamma_basis(n: int, up_to: int, cache_dir=None) -> GammaBasis:
    """Convenience wrapper: temporarily point the cache at `cache_dir`."""
    global _disk_cache_dir
    if cache_dir is None:
        return gamma_basis(n, up_to)
    old = _disk_cache_dir
    _disk_cache_dir = Path(cache_dir)
    try:
        return gamma_basis(n, up_to)
    finally:
        _disk_cache_dir = old


def expand_in_gamma(h: HeckeElt, basis: GammaBasis) -> CentralCoords:
    """
    Expand a central element in the class-element basis by reading its
    coefficients at the canonical minimal representatives, then verifying
    the reconstruction is exact.
    """
    if h.n != basis.n:
        raise InvalidInputError(f"rank mismatch: element in S_{h.n}, basis for S_{basis.n}")
    if not is_central(h):
        raise InvalidInputError("expand_in_gamma requires a central element")
    coords: dict[Partition, IntPoly] = {}
    residual = h
    for nu in basis.valid_partitions():
        c = h.coeff(min_rep(nu, basis.n))
        if c:
            coords[nu] = c
            residual = residual - basis.gamma[nu].scale(c)
    if residual:
        raise BasisIncompleteError(
            f"element is not in the span of the basis through size {basis.up_to} "
            f"(residual has {len(residual)} terms)"
        )
    return CentralCoords(n=basis.n, coords=coords)


def structure_constants(lam: Partition, mu: Partition, n: int) -> CentralCoords:
    """
    Coordinates of gamma_lam(n) * gamma_mu(n) in the class-element basis.
    Empty when either factor vanishes in S_n.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if not fits_rank(lam, n) or not fits_rank(mu, n):
        return CentralCoords(n=n, coords={})
    key = (lam, mu, n)
    cached = _struct_memo.get(key)
    if cached is not None:
        return cached
    basis = gamma_basis(n, sum(lam) + sum(mu))
    product = mul(basis.gamma[lam], basis.gamma[mu])
    coords = expand_in_gamma(product, basis)
    _struct_memo[key] = coords
    return coords


_struct_memo: dict[tuple[Partition, Partition, int], CentralCoords] = {}


def m_sym_in_gamma(lam: Partition, n: int) -> CentralCoords:
    """
    Coordinates of the monomial symmetric element m_lam(n) in the
    class-element basis; supported on sizes at most |lam|.
    """
    lam = check_partition(lam)
    basis = gamma_basis(n, sum(lam))
    return expand_in_gamma(m_sym(lam, n), basis)


def class_sum_oracle(lam: Partition, mu: Partition, n: int) -> dict[Partition, int]:
    """
    Multiply the literal class sums in Z S_n by plain convolution and read
    off class-indicator coefficients. Entirely independent of the Hecke
    code path; this is the x = 0 oracle.
    """
    a = {w: 1 for w in coxeter.conjugacy_class(lam, n)}
    b = {w: 1 for w in coxeter.conjugacy_class(mu, n)}
    product = group_mul(a, b)
    out: dict[Partition, int] = {}
    counts: dict[Partition, int] = {}
    for w, c in product.items():
        nu = coxeter.modified_cycle_type(w)
        prev = out.get(nu)
        if prev is None:
            out[nu] = c
        elif prev != c:
            raise InvariantViolationError(
                f"class sum product not constant on class {nu} in S_{n}"
            )
        counts[nu] = counts.get(nu, 0) + 1
    # a class either appears in full or not at all
    for nu, seen in counts.items():
        if seen != len(coxeter.conjugacy_class(nu, n)):
            raise InvariantViolationError(
                f"class sum product covers class {nu} only partially in S_{n}"
            )
    return out


def _pairs_up_to(n: int, max_size: int) -> list[tuple[Partition, Partition]]:
    parts = [p for p in coxeter.partitions_up_to(max_size) if fits_rank(p, n)]
    index = {p: i for i, p in enumerate(parts)}
    out = []
    for lam in parts:
        for mu in parts:
            if index[mu] < index[lam] or sum(lam) + sum(mu) > max_size:
                continue
            out.append((lam, mu))
    out.sort(key=lambda pair: (sum(pair[0]) + sum(pair[1]), index[pair[0]], index[pair[1]]))
    return out


def check_entry_clauses(
    lam: Partition, mu: Partition, coords: CentralCoords
) -> list[str]:
    """
    Positivity and parity clauses for one product row: every coordinate must
    be a polynomial with nonnegative integer coefficients whose parity in x
    matches |lam| + |mu| - |nu| mod 2.
    """
    witnesses = []
    total = sum(lam) + sum(mu)
    for nu, c in coords.coords.items():
        if not c.is_nonnegative():
            witnesses.append(
                f"k[{lam},{mu}->{nu}](n={coords.n}) = {c} has a negative coefficient"
            )
        want = "even" if (total - sum(nu)) % 2 == 0 else "odd"
        if c and c.parity() != want:
            witnesses.append(
                f"k[{lam},{mu}->{nu}](n={coords.n}) = {c} should be {want} in x"
            )
    return witnesses


def verify_structure_constants(n: int, max_size: int) -> CheckReport:
    """
    Check, for every product with |lam| + |mu| <= max_size in S_n:
    positivity, parity, the support bound |nu| <= |lam| + |mu| (via an
    exact reconstruction residual), and commutativity of the product.
    """
    report = CheckReport(name=f"structure-constants n={n} max_size={max_size}")
    for lam, mu in _pairs_up_to(n, max_size):
        basis = gamma_basis(n, sum(lam) + sum(mu))
        p1 = mul(basis.gamma[lam], basis.gamma[mu])
        report.checks += 1
        if lam != mu:
            p2 = mul(basis.gamma[mu], basis.gamma[lam])
            if p1 != p2:
                report.witnesses.append(
                    f"gamma_{lam} gamma_{mu} != gamma_{mu} gamma_{lam} at n={n}"
                )
        try:
            coords = expand_in_gamma(p1, basis)
        except BasisIncompleteError as exc:
            report.witnesses.append(
                f"support of gamma_{lam} gamma_{mu} exceeds size {sum(lam) + sum(mu)} "
                f"at n={n}: {exc}"
            )
            continue
        report.checks += 1 + len(coords.coords)
        report.witnesses.extend(check_entry_clauses(lam, mu, coords))
    return report


def verify_gamma_characterization(n: int, up_to: int) -> CheckReport:
    """Re-run the full characterization of every materialized class element."""
    report = CheckReport(name=f"characterization n={n} up_to={up_to}")
    basis = gamma_basis(n, up_to)
    for lam in basis.valid_partitions():
        witnesses, checks = _characterization_witnesses(lam, n, basis.gamma[lam], up_to)
        report.checks += checks
        report.witnesses.extend(witnesses)
    return report


def verify_zero_specialization(n: int, max_size: int) -> CheckReport:
    """Structure constants at x = 0 must match the group algebra oracle."""
    report = CheckReport(name=f"zero-specialization-oracle n={n} max_size={max_size}")
    for lam, mu in _pairs_up_to(n, max_size):
        report.checks += 1
        got = structure_constants(lam, mu, n).specialize_zero()
        want = class_sum_oracle(lam, mu, n)
        if got != want:
            report.witnesses.append(
                f"x=0 mismatch for ({lam}, {mu}) at n={n}: hecke {got} vs group {want}"
            )
    return report


def verify_elementary_sums(n: int, r_max: int) -> CheckReport:
    """e_r(L_1..L_n) must equal the sum of gamma_lam(n) over |lam| = r."""
    if r_max >= n:
        raise InvalidInputError(f"r_max must be below n, got r_max={r_max}, n={n}")
    report = CheckReport(name=f"elementary-sums n={n} r_max={r_max}")
    basis = gamma_basis(n, r_max)
    for r in range(1, r_max + 1):
        report.checks += 1
        lhs = hecke.e_sym(r, n)
        rhs = hecke.zero(n)
        for lam in coxeter.partitions_of(r):
            if fits_rank(lam, n):
                rhs = rhs + basis.gamma[lam]
        if lhs != rhs:
            report.witnesses.append(
                f"e_{r} differs from the sum of size-{r} class elements at n={n}"
            )
    return report


def _pair_worker(args: tuple[Partition, Partition, int]) -> tuple[Partition, Partition, CentralCoords]:
    lam, mu, n = args
    return lam, mu, structure_constants(lam, mu, n)


def _worker_init(cache_dir) -> None:
    set_cache_dir(cache_dir)


def build_struct_table(n: int, max_size: int, jobs: int = 1) -> StructTable:
    """
    All products with |lam| + |mu| <= max_size (unordered pairs of nonempty
    valid partitions). With jobs > 1 the pairs are computed in a process
    pool; results are merged in canonical order so output is identical
    regardless of parallelism.
    """
    pairs = [(lam, mu) for lam, mu in _pairs_up_to(n, max_size) if lam and mu]
    results: dict[tuple[Partition, Partition], CentralCoords] = {}
    if jobs > 1 and len(pairs) > 1:
        gamma_basis(n, max_size)  # built once in the parent; forked children share it
        with ProcessPoolExecutor(
            max_workers=jobs, initializer=_worker_init, initargs=(_disk_cache_dir,)
        ) as pool:
            for lam, mu, coords in pool.map(
                _pair_worker, [(lam, mu, n) for lam, mu in pairs]
            ):
                results[(lam, mu)] = coords
    else:
        for lam, mu in pairs:
            results[(lam, mu)] = structure_constants(lam, mu, n)
    entries = [(lam, mu, results[(lam, mu)]) for lam, mu in pairs]
    return StructTable(n=n, max_size=max_size, entries=entries)
