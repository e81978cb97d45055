"""Chowla-Milnor spaces as exact Q-subspaces of cyclotomic fields.

The even part V+_k(q) of the space spanned by Hurwitz zeta values, once
divided by (i pi)^k, is spanned by the values C_k(a, q), a in T_q.  All
dimension statements then become exact rank computations over Q inside a
common field Q(zeta_N).  Independence over a cyclotomic field F = Q(zeta_m)
is reduced to independence over Q of the family {zeta_m^j v}.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd, prod

from .characters import all_characters, half_residues, l_coordinates
from .cotangent import cotan_norm
from .cyclotomic import CycloElem, embed, root_of_unity
from .exact import euler_phi, lcm, zeta_norm
from .linalg import RationalMatrix

DEFAULT_MAX_PHI = 256


class DeskScaleError(ValueError):
    """The computation would need a field larger than the configured bound."""


class HypothesisError(ValueError):
    """Parameters violate a theorem's hypotheses."""


def _guard(N: int, max_phi: int) -> None:
    if euler_phi(N) > max_phi:
        raise DeskScaleError(f"Q(zeta_{N}) has degree {euler_phi(N)} > max_phi={max_phi}")


# ---------------------------------------------------------------------------
# generator sets
# ---------------------------------------------------------------------------


@dataclass
class GeneratorSet:
    ambient: int
    items: list[tuple[str, CycloElem]]

    def __post_init__(self):
        labels = [lab for lab, _ in self.items]
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be unique")
        for _, v in self.items:
            if v.n != self.ambient:
                raise ValueError("generators must be embedded in the ambient field")

    @classmethod
    def build(cls, items, max_phi: int = DEFAULT_MAX_PHI, ambient: int | None = None) -> "GeneratorSet":
        items = list(items)
        N = lcm(*(v.n for _, v in items), ambient or 1)
        _guard(N, max_phi)
        return cls(N, [(lab, embed(v, N)) for lab, v in items])

    def __len__(self):
        return len(self.items)

    @property
    def labels(self) -> list[str]:
        return [lab for lab, _ in self.items]

    @property
    def values(self) -> list[CycloElem]:
        return [v for _, v in self.items]

    def matrix(self) -> RationalMatrix:
        """Coordinate matrix: one column per generator, phi(N) rows."""
        return RationalMatrix.from_columns([v.coeffs for v in self.values])

    def union(self, other: "GeneratorSet", max_phi: int = DEFAULT_MAX_PHI) -> "GeneratorSet":
        return GeneratorSet.build(self.items + other.items, max_phi)


def dim_vplus(k: int, q: int) -> int:
    """dim_Q V+_k(q): phi(q)/2 for q > 2, else (1 + (-1)^k)/2."""
    if q > 2:
        return euler_phi(q) // 2
    return 1 if k % 2 == 0 else 0


def vplus_indexed(k: int, q: int, prefix: str = "") -> list[tuple[int, str, CycloElem]]:
    """(a, label, value) spanning (i pi)^-k V+_k(q); degenerate q <= 2 use a = 1."""
    if q > 2:
        return [(a, f"{prefix}C_{k}({a},{q})", cotan_norm(k, a, q).value) for a in half_residues(q)]
    if q < 1:
        raise ValueError("q must be >= 1")
    if k % 2:
        return []
    base = 2 * zeta_norm(k)
    if q == 1:
        return [(1, f"{prefix}zeta_norm({k})*2", CycloElem.from_rational(1, base))]
    return [(1, f"{prefix}zeta_norm({k})*2*(2^{k}-1)", CycloElem.from_rational(1, (2**k - 1) * base))]


def vplus_items(k: int, q: int, prefix: str = "") -> list[tuple[str, CycloElem]]:
    return [(lab, v) for _, lab, v in vplus_indexed(k, q, prefix)]


def vplus_generators(k: int, q: int, max_phi: int = DEFAULT_MAX_PHI) -> GeneratorSet:
    if k < 1:
        raise ValueError("k must be >= 1")
    if q <= 2 and k < 2:
        raise ValueError("q <= 2 needs k >= 2")
    return GeneratorSet.build(vplus_items(k, q), max_phi, ambient=q if q > 2 else 1)


def span_rank_Q(g: GeneratorSet) -> tuple[int, list[list[Fraction]]]:
    """Exact Q-rank of the generators and a basis of their linear relations."""
    if not len(g):
        return 0, []
    m = g.matrix()
    return m.rank(), m.kernel()


def basis_multiplied(g: GeneratorSet, m: int, max_phi: int = DEFAULT_MAX_PHI) -> GeneratorSet:
    """{zeta_m^j * v : 0 <= j < phi(m), v in g} inside Q(zeta_lcm(N, m))."""
    N = lcm(g.ambient, m)
    _guard(N, max_phi)
    powers = [embed(root_of_unity(m, j), N) for j in range(euler_phi(m))]
    items = []
    for lab, v in g.items:
        ve = embed(v, N)
        for j, z in enumerate(powers):
            items.append((f"{lab}*z{m}^{j}", z * ve))
    return GeneratorSet(N, items)


def rank_over_cyclotomic(g: GeneratorSet, m: int, max_phi: int = DEFAULT_MAX_PHI) -> int:
    """dim over Q(zeta_m) of the Q(zeta_m)-span of g."""
    if m == 1 or not len(g):
        return span_rank_Q(g)[0]
    r = basis_multiplied(g, m, max_phi).matrix().rank()
    phi = euler_phi(m)
    assert r % phi == 0, "F-span must have Q-dimension divisible by [F:Q]"
    return r // phi


def independent_over_cyclotomic(g: GeneratorSet, m: int, max_phi: int = DEFAULT_MAX_PHI) -> bool:
    return rank_over_cyclotomic(g, m, max_phi) == len(g)


def real_subfield_basis(M: int) -> GeneratorSet:
    """Q-basis of Q(zeta_M)^+: zeta^j + zeta^-j for 0 <= j < phi(M)/2."""
    if M <= 2:
        return GeneratorSet(M, [("1", CycloElem.one(M))])
    items = []
    for j in range(euler_phi(M) // 2):
        items.append((f"z^{j}+z^-{j}", root_of_unity(M, j) + root_of_unity(M, -j)))
    return GeneratorSet(M, items)


def disjoint_from_real_subfield(m: int, M: int, max_phi: int = DEFAULT_MAX_PHI) -> bool:
    """Q(zeta_m) and Q(zeta_M)^+ intersect in Q.

    Both are Galois over Q, so this is linear disjointness: a Q-basis of the
    real subfield stays independent over Q(zeta_m)."""
    basis = real_subfield_basis(M)
    assert span_rank_Q(basis)[0] == len(basis)
    return independent_over_cyclotomic(basis, m, max_phi)


def sigma_minus_one_eigenspace_dim(k: int, q: int) -> int:
    """dim_Q of {x in Q(zeta_q) : conj(x) = (-1)^k x}."""
    from .cyclotomic import conjugate

    sign = -1 if k % 2 else 1
    n = euler_phi(q)
    cols = []
    for j in range(n):
        e = CycloElem(q, [1 if i == j else 0 for i in range(n)])
        cols.append((conjugate(e) - e * sign).coeffs)
    return len(RationalMatrix.from_columns(cols).kernel())


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass
class SpanReport:
    theorem: str
    params: dict
    expected: int
    computed: int
    kernel_dim: int | None = None
    hypothesis_ok: bool = True
    elapsed_ms: int = 0
    kernel: list[list[Fraction]] | None = None
    details: dict = field(default_factory=dict)
    verdict: str = ""

    def __post_init__(self):
        if not self.verdict:
            if not self.hypothesis_ok:
                self.verdict = "hypothesis-failed"
            else:
                self.verdict = "pass" if self.computed == self.expected and self.details.get("checks_ok", True) else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "theorem": self.theorem,
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
        }
        if self.kernel_dim is not None:
            d["kernel_dim"] = self.kernel_dim
        d["hypothesis_ok"] = self.hypothesis_ok
        d["verdict"] = self.verdict
        if timing:
            d["elapsed_ms"] = self.elapsed_ms
        if self.kernel is not None:
            d["kernel"] = [[str(x) for x in v] for v in self.kernel]
        if self.details:
            d["details"] = self.details
        return d


def _hypothesis_failed(theorem: str, params: dict, reason: str) -> SpanReport:
    return SpanReport(theorem, params, -1, -1, hypothesis_ok=False, details={"reason": reason})


def pairwise_coprime(nums) -> bool:
    return all(gcd(a, b) == 1 for a, b in combinations(nums, 2))


def _require_coprime(moduli) -> None:
    if not pairwise_coprime(moduli):
        raise HypothesisError(f"moduli {tuple(moduli)} are not pairwise coprime")


# ---------------------------------------------------------------------------
# sum spaces
# ---------------------------------------------------------------------------


def _sum_blocks(k: int, moduli) -> list[list[tuple[str, CycloElem]]]:
    return [vplus_items(k, q, prefix=f"[{j}]") for j, q in enumerate(moduli)]


def _flatten(blocks, max_phi: int, ambient: int = 1) -> GeneratorSet:
    return GeneratorSet.build([it for b in blocks for it in b], max_phi, ambient=ambient)


def cor1_expected(k: int, moduli) -> int:
    return sum(dim_vplus(k, q) for q in moduli) - (len(moduli) - 1) * dim_vplus(k, 1)


def cor1_expected_second_reading(k: int, moduli) -> int | None:
    """The special-case display for 2 = q_1 < q_2, ...; None when it does not apply."""
    if 2 not in moduli:
        return None
    rest = [q for q in moduli if q != 2]
    ell = len(moduli)
    return sum(euler_phi(q) // 2 for q in rest) - (ell - 2) * (1 if k % 2 == 0 else 0)


def sum_space_rank(k: int, moduli, m: int = 1, max_phi: int = DEFAULT_MAX_PHI) -> SpanReport:
    t0 = time.perf_counter()
    moduli = list(moduli)
    params = {"k": k, "moduli": moduli, "m": m}
    if k < 2:
        raise ValueError("sum spaces need k >= 2")
    _require_coprime(moduli)
    g = _flatten(_sum_blocks(k, moduli), max_phi, ambient=prod(moduli))
    computed = rank_over_cyclotomic(g, m, max_phi)
    expected = cor1_expected(k, moduli)
    details = {}
    second = cor1_expected_second_reading(k, moduli)
    if second is not None:
        details["second_reading"] = second
        details["readings_agree"] = second == expected
    return SpanReport("cor1", params, expected, computed, details=details, elapsed_ms=_ms(t0))


def _uniform_blocks(vec, sizes) -> bool:
    pos = 0
    for s in sizes:
        block = vec[pos : pos + s]
        if len(set(block)) > 1:
            return False
        pos += s
    return True


def kernel_of_sum_map(k: int, moduli, max_phi: int = DEFAULT_MAX_PHI) -> SpanReport:
    t0 = time.perf_counter()
    moduli = list(moduli)
    params = {"k": k, "moduli": moduli}
    if k < 2:
        raise ValueError("sum spaces need k >= 2")
    _require_coprime(moduli)
    blocks = _sum_blocks(k, moduli)
    g = _flatten(blocks, max_phi, ambient=prod(moduli))
    _, ker = span_rank_Q(g)
    expected = 0 if k % 2 else len(moduli) - 1
    uniform = all(_uniform_blocks(v, [len(b) for b in blocks]) for v in ker)
    return SpanReport(
        "propinter",
        params,
        expected,
        len(ker),
        kernel_dim=len(ker),
        kernel=ker,
        details={"uniform_blocks": uniform, "checks_ok": uniform, "labels": g.labels},
        elapsed_ms=_ms(t0),
    )


def intersection_dim(k: int, q1: int, q2: int, max_phi: int = DEFAULT_MAX_PHI) -> SpanReport:
    """dim(V+(q1) cap V+(q2)) compared with dim V+(gcd(q1, q2))."""
    t0 = time.perf_counter()
    if k < 2:
        raise ValueError("intersection_dim needs k >= 2")
    N = lcm(q1, q2)
    a = GeneratorSet.build(vplus_items(k, q1, "[0]"), max_phi, ambient=N)
    b = GeneratorSet.build(vplus_items(k, q2, "[1]"), max_phi, ambient=N)
    ra, rb = span_rank_Q(a)[0], span_rank_Q(b)[0]
    rab = span_rank_Q(a.union(b, max_phi))[0]
    d = gcd(q1, q2)
    return SpanReport(
        "leminter",
        {"k": k, "q1": q1, "q2": q2},
        dim_vplus(k, d),
        ra + rb - rab,
        details={"gcd": d, "rank_q1": ra, "rank_q2": rb, "rank_sum": rab},
        elapsed_ms=_ms(t0),
    )


def monotone_inclusion(k: int, q: int, q1: int, max_phi: int = DEFAULT_MAX_PHI) -> bool:
    """V+(q) is inside V+(q1) when q | q1: adding its generators keeps the rank."""
    if q1 % q:
        raise ValueError("q must divide q1")
    big = GeneratorSet.build(vplus_items(k, q1, "[1]"), max_phi, ambient=q1)
    small = GeneratorSet.build(vplus_items(k, q, "[0]"), max_phi, ambient=q1)
    return span_rank_Q(big.union(small, max_phi))[0] == span_rank_Q(big)[0]


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------


def u_set(k: int, moduli, j: int) -> list[int]:
    """U_j(k): T_{q_j}, with a = 1 dropped for j != 0 when k is even (0-based j)."""
    q = moduli[j]
    t = half_residues(q)
    if k % 2 == 0 and j != 0:
        return [a for a in t if a != 1]
    return t


def product_items(ks, qs, pruned: bool = False, prefix: str = "") -> list[tuple[str, CycloElem]]:
    """prod_t C_{k_t}(a_t, q_t) over (a_1..a_r) in prod T_{q_t}; ``pruned`` drops
    the index (1, ..., 1).  Degenerate q_t <= 2 contribute their V+ generator."""
    ks, qs = list(ks), list(qs)
    if len(ks) != len(qs):
        raise ValueError("ks and qs must have the same length")
    factors = [vplus_indexed(k, q) for k, q in zip(ks, qs)]
    N = prod(qs)
    out = []
    for combo in product(*factors):
        if pruned and all(a == 1 for a, _, _ in combo):
            continue
        val = CycloElem.one(N)
        for _, _, v in combo:
            val = val * embed(v, N)
        out.append((prefix + "*".join(lab for _, lab, _ in combo), val))
    return out


def product_generators(ks, qs, selection: str = "full", max_phi: int = DEFAULT_MAX_PHI) -> GeneratorSet:
    """Products of C-values; ``selection`` is "full" or "pruned"."""
    _require_coprime(qs)
    if selection not in ("full", "pruned"):
        raise ValueError("selection must be 'full' or 'pruned'")
    _guard(prod(qs), max_phi)
    return GeneratorSet.build(product_items(ks, qs, selection == "pruned"), max_phi, ambient=prod(qs))


def _grid_product_blocks(ks, grid, pruned_rule: bool = False):
    all_even = all(k % 2 == 0 for k in ks)
    blocks = []
    for j, qvec in enumerate(grid):
        pruned = pruned_rule and all_even and j != 0
        blocks.append(product_items(ks, qvec, pruned, prefix=f"[{j}]"))
    return blocks


def _grid_ambient(grid) -> int:
    return lcm(*(prod(qvec) for qvec in grid))


def thm9_expected(ks, grid) -> int:
    total = sum(prod(dim_vplus(k, q) for k, q in zip(ks, qvec)) for qvec in grid)
    if all(k % 2 == 0 for k in ks):
        total -= len(grid) - 1
    return total


def thm10_expected(ks, factor_moduli) -> int:
    out = 1
    for k, qs in zip(ks, factor_moduli):
        out *= cor1_expected(k, qs)
    return out


# ---------------------------------------------------------------------------
# theorem verification
# ---------------------------------------------------------------------------


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def _flat_grid(grid) -> list[int]:
    return [q for qvec in grid for q in qvec]


def _check_disjoint(m: int, M: int, max_phi: int) -> bool:
    return disjoint_from_real_subfield(m, M, max_phi)


def _verify_okada(p, max_phi):
    k, q, m = p["k"], p["q"], p.get("m", 1)
    if q <= 2:
        raise HypothesisError("okada needs q > 2")
    if not _check_disjoint(m, q, max_phi):
        raise HypothesisError(f"Q(zeta_{m}) meets Q(zeta_{q})^+ nontrivially")
    g = vplus_generators(k, q, max_phi)
    return SpanReport("okada", p, euler_phi(q) // 2, rank_over_cyclotomic(g, m, max_phi))


def _verify_cor1(p, max_phi):
    k, moduli, m = p["k"], p["moduli"], p.get("m", 1)
    _require_coprime(moduli)
    if k < 2:
        raise HypothesisError("cor1 needs k > 1")
    if not _check_disjoint(m, prod(moduli), max_phi):
        raise HypothesisError("field hypothesis fails")
    r = sum_space_rank(k, moduli, m, max_phi)
    r.params = p
    return r


def _verify_cor3(p, max_phi):
    """Upper bound: the per-modulus trace relations give ell-1 independent
    relations among the sum(phi(q_j)) Hurwitz generators.  Each relation is
    certified numerically; the lower bound is the V+ rank (cor1)."""
    from .numerics import hurwitz_zeta

    import mpmath

    k, moduli = p["k"], p["moduli"]
    prec = p.get("precision", 128)
    _require_coprime(moduli)
    if any(q <= 2 for q in moduli) or k < 2:
        raise HypothesisError("cor3 needs q_j > 2 and k > 1")
    from .characters import coprime_residues
    from .exact import euler_factor

    sizes = [euler_phi(q) for q in moduli]
    # sum_{a} zeta(k, a/q_j) = c_j zeta(k), c_j = q_j^k prod(1 - p^-k)
    c = [Fraction(q) ** k * euler_factor(k, q) for q in moduli]
    rels = []
    for j in range(1, len(moduli)):
        v = []
        for t, s in enumerate(sizes):
            coef = c[j] if t == 0 else (-c[0] if t == j else 0)
            v.extend([coef] * s)
        rels.append(v)
    rel_rank = RationalMatrix(rels).rank() if rels else 0
    worst = mpmath.mpf(0)
    with mpmath.workprec(prec + 32):
        vals = [
            hurwitz_zeta(k, Fraction(a, q), prec).value for q in moduli for a in coprime_residues(q)
        ]
        for v in rels:
            worst = max(worst, abs(mpmath.fsum(mpmath.mpf(x.numerator) / x.denominator * z for x, z in zip(v, vals))))
    tol = mpmath.mpf(2) ** (-(prec - 40))
    relations_ok = bool(worst < tol)
    lower = sum_space_rank(k, moduli, 1, max_phi).computed
    return SpanReport(
        "cor3",
        p,
        sum(sizes) - (len(moduli) - 1),
        sum(sizes) - rel_rank,
        details={
            "relations_ok": relations_ok,
            "checks_ok": relations_ok,
            "max_relation_residual": mpmath.nstr(worst, 5),
            "lower_bound": lower,
            "lower_bound_status": "conditional",
        },
    )


def _verify_prop1(p, max_phi):
    k, moduli, m = p["k"], p["moduli"], p.get("m", 1)
    _require_coprime(moduli)
    if any(q <= 2 for q in moduli) or k < 2:
        raise HypothesisError("prop1 needs q_j > 2 and k > 1")
    if not _check_disjoint(m, prod(moduli), max_phi):
        raise HypothesisError("field hypothesis fails")
    items = []
    for j, q in enumerate(moduli):
        for a in u_set(k, moduli, j):
            items.append((f"[{j}]C_{k}({a},{q})", cotan_norm(k, a, q).value))
    g = GeneratorSet.build(items, max_phi, ambient=prod(moduli))
    return SpanReport("prop1", p, len(g), rank_over_cyclotomic(g, m, max_phi))


def _default_m(moduli) -> int:
    return prod(euler_phi(q) for q in moduli)


def _verify_thm1(p, max_phi):
    k, moduli = p["k"], p["moduli"]
    m = p.get("m") or _default_m(moduli)
    p = {**p, "m": m}
    _require_coprime(moduli)
    if any(q <= 2 for q in moduli) or k < 1:
        raise HypothesisError("thm1 needs q_j > 2 and k >= 1")
    if not _check_disjoint(m, prod(moduli), max_phi):
        raise HypothesisError(f"Q(zeta_{m}) meets Q(zeta_{prod(moduli)})^+ nontrivially")
    order = 2 * k + 1
    items = []
    for q in moduli:
        for chi in all_characters(q):
            if chi.parity == -1:
                items.append((f"Lambda({order},{chi.label()})", l_coordinates(order, chi)))
    g = GeneratorSet.build(items, max_phi)
    return SpanReport("thm1", p, len(g), rank_over_cyclotomic(g, m, max_phi), details={"field_index": g.ambient})


def _verify_thm2(p, max_phi):
    k, moduli = p["k"], p["moduli"]
    m = p.get("m") or _default_m(moduli)
    p = {**p, "m": m}
    _require_coprime(moduli)
    if any(q <= 2 for q in moduli) or k < 1:
        raise HypothesisError("thm2 needs q_j > 2 and k >= 1")
    if not _check_disjoint(m, prod(moduli), max_phi):
        raise HypothesisError(f"Q(zeta_{m}) meets Q(zeta_{prod(moduli)})^+ nontrivially")
    order = 2 * k
    items = [(f"zeta_norm({order})", CycloElem.from_rational(1, zeta_norm(order)))]
    for q in moduli:
        for chi in all_characters(q):
            if chi.parity == 1 and not chi.is_trivial():
                items.append((f"Lambda({order},{chi.label()})", l_coordinates(order, chi)))
    g = GeneratorSet.build(items, max_phi)
    return SpanReport("thm2", p, len(g), rank_over_cyclotomic(g, m, max_phi), details={"field_index": g.ambient})


def _grid_hypotheses(ks, grid):
    r = len(ks)
    if any(len(qvec) != r for qvec in grid):
        raise HypothesisError("every grid vector needs one modulus per k")
    if any(k < 2 for k in ks):
        raise HypothesisError("k_t > 1 required")
    if not pairwise_coprime(_flat_grid(grid)):
        raise HypothesisError("grid moduli must be pairwise coprime")


def _verify_leminterm(p, max_phi):
    ks, grid = p["ks"], p["grid"]
    if len(grid) != 2:
        raise HypothesisError("leminterm compares exactly two vectors")
    _grid_hypotheses(ks, grid)
    blocks = _grid_product_blocks(ks, grid)
    N = _grid_ambient(grid)
    a = GeneratorSet.build(blocks[0], max_phi, ambient=N)
    b = GeneratorSet.build(blocks[1], max_phi, ambient=N)
    ra, rb = span_rank_Q(a)[0], span_rank_Q(b)[0]
    rab = span_rank_Q(a.union(b, max_phi))[0]
    expected = 1 if all(k % 2 == 0 for k in ks) else 0
    return SpanReport("leminterm", p, expected, ra + rb - rab)


def _verify_propinter(p, max_phi):
    k, moduli = p["k"], p["moduli"]
    if k < 2:
        raise HypothesisError("k > 1 required")
    _require_coprime(moduli)
    r = kernel_of_sum_map(k, moduli, max_phi)
    r.params = p
    return r


def _verify_propinterm(p, max_phi):
    ks, grid = p["ks"], p["grid"]
    _grid_hypotheses(ks, grid)
    blocks = _grid_product_blocks(ks, grid)
    g = _flatten(blocks, max_phi, ambient=_grid_ambient(grid))
    _, ker = span_rank_Q(g)
    expected = len(grid) - 1 if all(k % 2 == 0 for k in ks) else 0
    uniform = all(_uniform_blocks(v, [len(b) for b in blocks]) for v in ker)
    return SpanReport(
        "propinterm",
        p,
        expected,
        len(ker),
        kernel_dim=len(ker),
        kernel=ker,
        details={"uniform_blocks": uniform, "checks_ok": uniform},
    )


def _verify_thm9(p, max_phi):
    ks, grid, m = p["ks"], p["grid"], p.get("m", 1)
    _grid_hypotheses(ks, grid)
    qt = [prod(qvec[t] for qvec in grid) for t in range(len(ks))]
    if not _check_disjoint(m, prod(qt), max_phi):
        raise HypothesisError("field hypothesis fails")
    g = _flatten(_grid_product_blocks(ks, grid), max_phi, ambient=_grid_ambient(grid))
    return SpanReport("thm9", p, thm9_expected(ks, grid), rank_over_cyclotomic(g, m, max_phi))


def _verify_thm10(p, max_phi):
    ks, fm, m = p["ks"], p["factor_moduli"], p.get("m", 1)
    if len(ks) != len(fm) or any(k < 2 for k in ks):
        raise HypothesisError("one k_t > 1 per factor required")
    qt = [prod(qs) for qs in fm]
    if not pairwise_coprime(qt) or not all(pairwise_coprime(qs) for qs in fm):
        raise HypothesisError("factor moduli must be pairwise coprime")
    if not _check_disjoint(m, prod(qt), max_phi):
        raise HypothesisError("field hypothesis fails")
    N = prod(qt)
    _guard(N, max_phi)
    factor_sets = [[it for j, q in enumerate(qs) for it in vplus_items(k, q, f"[{j}]")] for k, qs in zip(ks, fm)]
    items = []
    for combo in product(*factor_sets):
        val = CycloElem.one(N)
        for _, v in combo:
            val = val * embed(v, N)
        items.append(("*".join(lab for lab, _ in combo), val))
    g = GeneratorSet.build(items, max_phi, ambient=N)
    return SpanReport("thm10", p, thm10_expected(ks, fm), rank_over_cyclotomic(g, m, max_phi))


def _verify_coha(p, max_phi):
    ks, grid, m = p["ks"], p["grid"], p.get("m", 1)
    _grid_hypotheses(ks, grid)
    if any(q <= 2 for q in _flat_grid(grid)):
        raise HypothesisError("coha needs all q_{t,j} > 2")
    g = _flatten(_grid_product_blocks(ks, grid, pruned_rule=True), max_phi, ambient=_grid_ambient(grid))
    return SpanReport("coha", p, len(g), rank_over_cyclotomic(g, m, max_phi))


def _verify_leminter(p, max_phi):
    r = intersection_dim(p["k"], p["q1"], p["q2"], max_phi)
    r.params = p
    return r


THEOREMS = {
    "okada": _verify_okada,
    "cor1": _verify_cor1,
    "cor3": _verify_cor3,
    "prop1": _verify_prop1,
    "propinter": _verify_propinter,
    "leminter": _verify_leminter,
    "leminterm": _verify_leminterm,
    "propinterm": _verify_propinterm,
    "thm1": _verify_thm1,
    "thm2": _verify_thm2,
    "thm9": _verify_thm9,
    "thm10": _verify_thm10,
    "coha": _verify_coha,
}


def verify_theorem(theorem_id: str, params: dict, max_phi: int = DEFAULT_MAX_PHI) -> SpanReport:
    """Check one theorem instance; hypothesis violations yield a
    ``hypothesis-failed`` report rather than an exception."""
    if theorem_id not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem_id!r}; choose from {sorted(THEOREMS)}")
    t0 = time.perf_counter()
    try:
        report = THEOREMS[theorem_id](dict(params), max_phi)
    except HypothesisError as exc:
        report = _hypothesis_failed(theorem_id, dict(params), str(exc))
    report.theorem = theorem_id
    report.elapsed_ms = _ms(t0)
    return report


def dry_identity(k: int, q: int, max_phi: int = DEFAULT_MAX_PHI) -> bool:
    """Over F = Q(zeta_phi(q)), the span of Lambda(k, chi) for chi(-1) = (-1)^k
    equals the span of the C_k(a, q), a in T_q (mutual containment by rank)."""
    m = euler_phi(q)
    lam = [
        (f"L{i}", l_coordinates(k, chi))
        for i, chi in enumerate(all_characters(q))
        if chi.parity == (-1) ** k
    ]
    cot = [(f"C{a}", cotan_norm(k, a, q).value) for a in half_residues(q)]
    N = lcm(q, m)
    A = GeneratorSet.build(lam, max_phi, ambient=N)
    B = GeneratorSet.build(cot, max_phi, ambient=N)
    ra = rank_over_cyclotomic(A, m, max_phi)
    rb = rank_over_cyclotomic(B, m, max_phi)
    rab = rank_over_cyclotomic(A.union(B, max_phi), m, max_phi)
    return ra == rb == rab
