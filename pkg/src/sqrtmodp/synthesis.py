"""General-k construction of the product-form square-root formula.

For p = 2^k n + 1 (n odd) the quadratic residues split into 2^(k-1) classes
by the value of a^n, which is always an even power z^(2tn) of the chosen
nonresidue z.  Each class index t contributes one bracket term: the
multiplier z^(en) with e = -t mod 2^(k-1) (exactly the twist that turns
a^((n+1)/2) into a root on that class), times k-1 indicator factors
(1 + x^(2^j n) z^(cn)) with c = -2^(j+1) t mod 2^k, whose product is
2^(k-1) on the class and 0 everywhere else on the residues.  Summing all
terms and scaling by 2^-(k-1) x^((n+1)/2) yields a single polynomial whose
value at every quadratic residue is a square root of it.

The same object supports sign normalization (folding z-exponents at or
above 2^(k-1) into minus signs via z^(2^(k-1) n) = -1), rendering to text,
LaTeX, and a structured document, and full expansion into a sparse
polynomial whose degree is 2^(k-1) n - (n-1)/2 with at most 2^(k-1) terms.
"""

import json
from dataclasses import dataclass
from functools import lru_cache

from .formulas import SqrtOutcome, WrongClass, _canonical, _screen
from .modarith import MulCounter, PrimeContext, mod_pow

__all__ = [
    "ExpandedPolynomial",
    "Factor",
    "MAX_K",
    "RenderedTerm",
    "SignedFactor",
    "SymbolicFormula",
    "Term",
    "degree_check",
    "evaluate",
    "evaluate_at",
    "expand",
    "formula_from_doc",
    "formula_to_doc",
    "normalize_signs",
    "render_math",
    "render_text",
    "sqrt_synth",
    "synthesize",
    "term_values",
]

MAX_K = 16


@dataclass(frozen=True)
class Factor:
    """One indicator factor (1 + x^(2^j n) z^(cn))."""

    j: int  # x-exponent level: the factor carries x^(2^j * n)
    c: int  # z-exponent coefficient, in [0, 2^k)


@dataclass(frozen=True)
class Term:
    """One bracket term: z^(en) times factors at levels j = k-2 down to 0."""

    e: int
    factors: tuple[Factor, ...]


@dataclass(frozen=True)
class SymbolicFormula:
    """2^(k-1) terms indexed by residue class; the overall prefactor
    2^-(k-1) x^((n+1)/2) is implicit."""

    k: int
    terms: tuple[Term, ...]


def synthesize(k: int) -> SymbolicFormula:
    """Build the k-class formula; no prime is needed, exponents stay symbolic."""
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be in [1, {MAX_K}], got {k}")
    half, full = 1 << (k - 1), 1 << k
    terms = []
    for t in range(half):
        e = (-t) % half
        factors = tuple(
            Factor(j, (-(t << (j + 1))) % full) for j in range(k - 2, -1, -1)
        )
        terms.append(Term(e, factors))
    return SymbolicFormula(k, tuple(terms))


@lru_cache(maxsize=None)
def _formula_for(k: int) -> SymbolicFormula:
    return synthesize(k)


def _bracket_terms(
    f: SymbolicFormula, ctx: PrimeContext, x: int, counter: MulCounter | None
) -> list[int]:
    """Value of every bracket term at x, sharing factor values across terms.

    A factor that evaluates to 0 zeroes its whole term, so the walk stops
    there; the sum is unchanged, only the multiplication count depends on
    which class x falls in.
    """
    p = ctx.p
    xp = [mod_pow(x, ctx.n, p, counter)]
    for _ in range(f.k - 2):
        v = xp[-1]
        xp.append(counter.mul(v, v, p) if counter else v * v % p)
    cache: dict[tuple[int, int], int] = {}
    values = []
    for term in f.terms:
        v = ctx.zn_pow(term.e)
        for fc in term.factors:
            key = (fc.j, fc.c)
            fv = cache.get(key)
            if fv is None:
                base, w = xp[fc.j], ctx.zn_pow(fc.c)
                prod = counter.mul(base, w, p) if counter else base * w % p
                fv = cache[key] = (1 + prod) % p
            if fv == 0:
                v = 0
                break
            v = counter.mul(v, fv, p) if counter else v * fv % p
        values.append(v)
    return values


def term_values(f: SymbolicFormula, ctx: PrimeContext, x: int) -> list[int]:
    """Each bracket term's value at x; at a residue exactly one is nonzero."""
    if ctx.k != f.k:
        raise WrongClass(f"formula has k={f.k}, context has k={ctx.k}")
    return _bracket_terms(f, ctx, x, None)


def evaluate_at(f: SymbolicFormula, ctx: PrimeContext, x: int) -> int:
    """Raw value of the defining expression at any x, residue or not."""
    if ctx.k != f.k:
        raise WrongClass(f"formula has k={f.k}, context has k={ctx.k}")
    p = ctx.p
    total = sum(_bracket_terms(f, ctx, x, None)) % p
    return ctx.half_pow(f.k - 1) * pow(x, (ctx.n + 1) // 2, p) % p * total % p


def evaluate(f: SymbolicFormula, ctx: PrimeContext, a: int) -> SqrtOutcome:
    """Square root of the residue a via the synthesized formula."""
    if ctx.k != f.k:
        raise WrongClass(f"formula has k={f.k}, context has k={ctx.k}")
    p = ctx.p
    c = MulCounter()
    _screen(ctx, a, c)
    total = sum(_bracket_terms(f, ctx, a, c)) % p
    ah = mod_pow(a, (ctx.n + 1) // 2, p, c)
    raw = c.mul(c.mul(ctx.half_pow(f.k - 1, c), ah, p), total, p)
    return _canonical(raw, p, "synth", c)


def sqrt_synth(ctx: PrimeContext, a: int) -> SqrtOutcome:
    """Synthesize (cached) and evaluate the formula for the context's class."""
    return evaluate(_formula_for(ctx.k), ctx, a)


@dataclass(frozen=True)
class SignedFactor:
    """A factor after sign folding: (1 sign x^(2^j n) z^(cn)) with c < 2^(k-1)."""

    sign: int  # +1 or -1
    j: int
    c: int


@dataclass(frozen=True)
class RenderedTerm:
    e: int
    factors: tuple[SignedFactor, ...]


def normalize_signs(f: SymbolicFormula) -> tuple[RenderedTerm, ...]:
    """Fold z-exponents >= 2^(k-1) into minus signs via z^(2^(k-1) n) = -1."""
    half = 1 << (f.k - 1)
    out = []
    for term in f.terms:
        folded = tuple(
            SignedFactor(-1, fc.j, fc.c - half)
            if fc.c >= half
            else SignedFactor(1, fc.j, fc.c)
            for fc in term.factors
        )
        out.append(RenderedTerm(term.e, folded))
    return tuple(out)


def _exp_n(m: int) -> str:
    return "n" if m == 1 else f"{m}n"


def _term_text(rt: RenderedTerm) -> str:
    parts = []
    if rt.e:
        parts.append(f"z^({_exp_n(rt.e)})")
    for sf in rt.factors:
        sign = "+" if sf.sign > 0 else "-"
        zpart = f" z^({_exp_n(sf.c)})" if sf.c else ""
        parts.append(f"(1 {sign} x^({_exp_n(1 << sf.j)}){zpart})")
    return "*".join(parts)


def render_text(f: SymbolicFormula) -> str:
    """Plain-text rendering; byte-stable, suitable for golden comparisons."""
    if f.k == 1:
        return "x^((n+1)/2)"
    body = " + ".join(_term_text(rt) for rt in normalize_signs(f))
    return f"2^-{f.k - 1} * x^((n+1)/2) * [ {body} ]"


def _term_math(rt: RenderedTerm) -> str:
    parts = []
    if rt.e:
        parts.append(f"z^{{{_exp_n(rt.e)}}}")
    for sf in rt.factors:
        sign = "+" if sf.sign > 0 else "-"
        zpart = f" z^{{{_exp_n(sf.c)}}}" if sf.c else ""
        parts.append(f"(1 {sign} x^{{{_exp_n(1 << sf.j)}}}{zpart})")
    return " ".join(parts)


def render_math(f: SymbolicFormula) -> str:
    """LaTeX rendering of the sign-normalized formula."""
    if f.k == 1:
        return "x^{(n+1)/2}"
    body = " + ".join(_term_math(rt) for rt in normalize_signs(f))
    return f"2^{{-{f.k - 1}}} x^{{(n+1)/2}} \\left[ {body} \\right]"


def formula_to_doc(f: SymbolicFormula) -> dict:
    """Structured machine-readable document mirroring the Term/Factor fields."""
    return {
        "kind": "sqrt_formula",
        "k": f.k,
        "inverse_power_of_two": f.k - 1,
        "x_exponent": "(n+1)/2",
        "terms": [
            {
                "t": t,
                "e": term.e,
                "factors": [{"j": fc.j, "c": fc.c} for fc in term.factors],
            }
            for t, term in enumerate(f.terms)
        ],
    }


def formula_from_doc(doc: dict) -> SymbolicFormula:
    """Inverse of formula_to_doc."""
    if doc.get("kind") != "sqrt_formula":
        raise ValueError("not a sqrt_formula document")
    terms = tuple(
        Term(
            int(td["e"]),
            tuple(Factor(int(fd["j"]), int(fd["c"])) for fd in td["factors"]),
        )
        for td in doc["terms"]
    )
    return SymbolicFormula(int(doc["k"]), terms)


def formula_to_json(f: SymbolicFormula) -> str:
    return json.dumps(formula_to_doc(f), indent=2)


@dataclass(frozen=True)
class ExpandedPolynomial:
    """Sparse coefficient form: (exponent, coefficient) pairs, exponents
    strictly decreasing, coefficients nonzero in [1, p)."""

    p: int
    terms: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return self.terms[0][0] if self.terms else -1

    def evaluate_at(self, x: int) -> int:
        return sum(co * pow(x, ex, self.p) for ex, co in self.terms) % self.p

    def text(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for ex, co in self.terms:
            if ex == 0:
                bits.append(str(co))
            else:
                head = "" if co == 1 else str(co)
                bits.append(f"{head}x" if ex == 1 else f"{head}x^{ex}")
        return " + ".join(bits)


def expand(f: SymbolicFormula, ctx: PrimeContext) -> ExpandedPolynomial:
    """Multiply the bracket out over F_p and attach the prefactor.

    Exponents are collected as plain integers (never reduced mod x^p - x);
    within one term the factor levels carry distinct powers of two, so
    subset exponents never collide.
    """
    if ctx.k != f.k:
        raise WrongClass(f"formula has k={f.k}, context has k={ctx.k}")
    p, n = ctx.p, ctx.n
    width = 1 << (f.k - 1)
    acc = [0] * width  # coefficient of x^(i*n) inside the bracket
    for term in f.terms:
        poly = {0: ctx.zn_pow(term.e)}
        for fc in term.factors:
            w = ctx.zn_pow(fc.c)
            step = 1 << fc.j
            poly.update({i + step: v * w % p for i, v in poly.items()})
        for i, v in poly.items():
            acc[i] = (acc[i] + v) % p
    scale = ctx.half_pow(f.k - 1)
    off = (n + 1) // 2
    terms = tuple(
        (i * n + off, acc[i] * scale % p)
        for i in range(width - 1, -1, -1)
        if acc[i]
    )
    return ExpandedPolynomial(p, terms)


def degree_check(poly: ExpandedPolynomial, ctx: PrimeContext) -> bool:
    """True iff degree is exactly 2^(k-1) n - (n-1)/2 with <= 2^(k-1) terms."""
    want = (1 << (ctx.k - 1)) * ctx.n - (ctx.n - 1) // 2
    return poly.degree == want and len(poly.terms) <= 1 << (ctx.k - 1)
