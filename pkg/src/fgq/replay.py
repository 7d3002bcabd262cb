"""Verification battery over a corpus of small quasigroups.

Each ``check_*`` function returns a :class:`CheckResult`; a result passes
when it saw at least one instance and recorded no failure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import NotFGError
from .genmod import PointedModule, PointedQuasigroup, check_module, module_from_form, rho, sigma
from .identities import (IdentityName, batch_identity, batch_is_F, batch_is_FG, batch_isotope_assoc, check_assoc2,
                         check_fg_char, check_fg_char0, check_identity, check_isotope_assoc, check_rearrange, is_F,
                         is_FG)
from .isotopes import IsotopeConvention, is_group, principal_isotope
from .linear import (ArithmeticForm, Convention, GroupTable, automorphisms, build_linear, center, check_F_linear,
                     enumerate_forms, extract_form, form_at_neutral, is_form_homomorphism)
from .qcore import CayleyTable, alpha_beta, compose, is_homomorphism, quotient, right_division
from .search import group_catalog, latin_stack, random_latin_stack, random_linear
from .structure import (Simplicity, classify_simple, mq, mq_congruence, mq_three_variable, mq_via_form,
                        structure_report)


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: int = 0
    example: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.instances > 0 and self.failures == 0

    def fail(self, detail: str):
        self.failures += 1
        if self.example is None:
            self.example = detail

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" first failure: {self.example}" if self.example else ""
        extra = "".join(f" {k}={v}" for k, v in self.extra.items())
        return f"{status} {self.name} instances={self.instances} failures={self.failures}{extra}{tail}"


@dataclass(frozen=True)
class ReplayConfig:
    max_order: int = 4
    sample: int = 0
    seed: int = 0
    linear_draws: int = 40
    homomorphism_maps: int = 300
    random_modules: int = 50


def _tables(stack: np.ndarray) -> list[CayleyTable]:
    return [CayleyTable(t) for t in stack]


@dataclass
class Corpus:
    stacks: dict[int, np.ndarray]
    linear: list[CayleyTable]

    def all_stacks(self) -> Iterable[np.ndarray]:
        yield from self.stacks.values()
        by_order: dict[int, list[np.ndarray]] = {}
        for t in self.linear:
            by_order.setdefault(t.n, []).append(t.cells)
        for cells in by_order.values():
            yield np.array(cells)

    def count(self) -> int:
        return sum(len(s) for s in self.stacks.values()) + len(self.linear)

    def selected(self, predicate) -> list[CayleyTable]:
        out = []
        for stack in self.stacks.values():
            for i in np.flatnonzero(predicate(stack)):
                out.append(CayleyTable(stack[i]))
        out.extend(t for t in self.linear if predicate(t.cells[None])[0])
        return out


def build_corpus(cfg: ReplayConfig) -> Corpus:
    stacks = {n: latin_stack(n) for n in range(1, min(cfg.max_order, 4) + 1)}
    if cfg.max_order >= 5:
        stacks[5] = random_latin_stack(5, cfg.sample, cfg.seed) if cfg.sample else latin_stack(5)
    linear = []
    for d in random_linear(group_catalog(), cfg.seed, cfg.linear_draws, constrained=True):
        if d.group.n <= 12:
            linear.append(build_linear(d.group, d.f, d.g, d.e))
    return Corpus(stacks, linear)


# -- identities and isotopes ----------------------------------------------------

def check_fg_equivalence(stacks: Iterable[np.ndarray]) -> CheckResult:
    res = CheckResult("fg-equivalence: (A) and (B) <=> F and isotope-associative")
    for T in stacks:
        fg = batch_is_FG(T)
        rhs = batch_is_F(T) & batch_isotope_assoc(T, 0, 0)
        res.instances += len(T)
        for i in np.flatnonzero(fg != rhs):
            res.fail(f"{CayleyTable(T[i])!r}")
        res.extra["fg"] = res.extra.get("fg", 0) + int(fg.sum())
    return res


def check_fas_fg(stacks: Iterable[np.ndarray]) -> CheckResult:
    res = CheckResult("f-as-fg: on F-quasigroups, FG <=> x ab(w).yz = xy.ab(w)z")
    for T in stacks:
        f = batch_is_F(T)
        idx = np.flatnonzero(f)
        if not idx.size:
            continue
        sub = np.asarray(T)[idx]
        bad = batch_is_FG(sub) != batch_identity(sub, IdentityName.FASFG)
        res.instances += len(idx)
        for i in np.flatnonzero(bad):
            res.fail(f"{CayleyTable(sub[i])!r}")
    return res


def check_a_implies_f(stacks: Iterable[np.ndarray]) -> CheckResult:
    res = CheckResult("a-implies-f: (A) => (Fl) and (B) => (Fr)")
    for T in stacks:
        a = batch_identity(T, IdentityName.A)
        b = batch_identity(T, IdentityName.B)
        fl = batch_identity(T, IdentityName.FL)
        fr = batch_identity(T, IdentityName.FR)
        res.instances += len(T)
        for i in np.flatnonzero((a & ~fl) | (b & ~fr)):
            res.fail(f"{CayleyTable(T[i])!r}")
    return res


def check_group_iso(stacks: Iterable[np.ndarray], spot_checks: int = 600) -> CheckResult:
    """Isotope associativity is independent of the basepoint; it agrees with
    is_group of the Sec4 isotope and with the operator form on spot checks."""
    res = CheckResult("isotope-basepoint: isotope associativity independent of (a, b)")
    spot = 0
    for T in stacks:
        T = np.asarray(T)
        n = T.shape[-1]
        ref = batch_isotope_assoc(T, 0, 0)
        for a in range(n):
            for b in range(n):
                for i in np.flatnonzero(batch_isotope_assoc(T, a, b) != ref):
                    res.fail(f"(a, b) = ({a}, {b}) on {CayleyTable(T[i])!r}")
        res.instances += len(T)
        for i in range(min(len(T), max(0, spot_checks - spot))):
            t = CayleyTable(T[i])
            spot += 1
            for a in range(n):
                for b in range(n):
                    iso_group = is_group(principal_isotope(t, a, b, IsotopeConvention.SEC4))
                    if iso_group != bool(ref[i]) or check_assoc2(t, a, b) != bool(ref[i]):
                        res.fail(f"spot check (a, b) = ({a}, {b}) on {t!r}")
    return res


def check_left_f_basics(tables: Sequence[CayleyTable], rng: np.random.Generator, pairs: int = 100) -> CheckResult:
    """Left-F tables: alpha endomorphism, alpha beta = beta alpha, and
    R_a L_b = L_b R_a <=> alpha(b) = beta(a) on random (a, b)."""
    res = CheckResult("left-f-basics: alpha endo, ab = ba, R_a L_b = L_b R_a <=> alpha(b) = beta(a)")
    for t in tables:
        if not check_identity(t, IdentityName.FL):
            continue
        res.instances += 1
        alpha, beta = alpha_beta(t)
        if not is_homomorphism(alpha, t, t):
            res.fail(f"alpha not an endomorphism of {t!r}")
        if compose(alpha, beta) != compose(beta, alpha):
            res.fail(f"alpha beta != beta alpha on {t!r}")
        c = t.cells
        for a, b in rng.integers(t.n, size=(pairs, 2)):
            commute = np.array_equal(c[c[b, :], a], c[b, c[:, a]])
            if commute != (alpha[b] == beta[a]):
                res.fail(f"(a, b) = ({a}, {b}) on {t!r}")
        for a in range(t.n):
            x, y = alpha[a], beta[a]
            if not np.array_equal(c[c[y, :], x], c[y, c[:, x]]):
                res.fail(f"item 3 at a={a} on {t!r}")
    return res


def check_commute(tables: Sequence[CayleyTable]) -> CheckResult:
    res = CheckResult("alpha-beta-commute: F => alpha, beta endomorphisms and commute")
    for t in tables:
        if not is_F(t):
            continue
        res.instances += 1
        alpha, beta = alpha_beta(t)
        if not (is_homomorphism(alpha, t, t) and is_homomorphism(beta, t, t)):
            res.fail(f"{t!r}")
        elif compose(alpha, beta) != compose(beta, alpha):
            res.fail(f"{t!r}")
    return res


def check_fg_translation_char(tables: Sequence[CayleyTable]) -> CheckResult:
    res = CheckResult("fg-translation-char: F-quasigroup FG <=> translation equations at every (a, b)")
    for t in tables:
        if not is_F(t):
            continue
        fg = is_FG(t)
        alpha, beta = alpha_beta(t)
        res.instances += 1
        for a in range(t.n):
            for b in range(t.n):
                if check_fg_char0(t, a, b) != fg:
                    res.fail(f"char0 (a, b) = ({a}, {b}) on {t!r}")
                if alpha[b] == beta[a] and check_fg_char(t, a, b) != fg:
                    res.fail(f"char (a, b) = ({a}, {b}) on {t!r}")
    return res


def check_rearrange_battery(tables: Sequence[CayleyTable]) -> CheckResult:
    res = CheckResult("translation-rearrange: L_x L_y^-1 R_v^-1 R_u = R_v^-1 R_u L_x L_y^-1")
    for t in tables:
        if not is_FG(t):
            continue
        res.instances += 1
        if not check_rearrange(t):
            res.fail(f"{t!r}")
    return res


# -- linear forms -----------------------------------------------------------------

def check_f_char_linear(rng: np.random.Generator, count: int,
                        groups: dict[str, GroupTable] | None = None) -> CheckResult:
    """Random (group, f, g, e) with arbitrary automorphisms, all three conventions."""
    res = CheckResult("linear-f-char: F laws <=> commuting + central shifts (Std, Dot1, Dot2)")
    groups = groups or {k: v for k, v in group_catalog().items() if v.n <= 8}
    names = sorted(groups)
    truths = 0
    for _ in range(count):
        g = groups[names[rng.integers(len(names))]]
        auts = automorphisms(g)
        f = auts[rng.integers(len(auts))]
        gg = auts[rng.integers(len(auts))]
        e = int(rng.integers(g.n))
        form = ArithmeticForm(g, f, gg, e)
        for conv in Convention:
            t = build_linear(g, f, gg, e, conv)
            fl = check_identity(t, IdentityName.FL)
            fr = check_identity(t, IdentityName.FR)
            got = (check_F_linear(form, "left", conv), check_F_linear(form, "right", conv),
                   check_F_linear(form, "both", conv))
            res.instances += 1
            truths += fl and fr
            if got != (fl, fr, fl and fr):
                res.fail(f"{conv.value} f={f} g={gg} e={e} on group {g.table!r}")
    res.extra["f_instances"] = truths
    return res


def check_rf_lf_linear(tables: Sequence[CayleyTable]) -> CheckResult:
    """For one-sided F tables presented as xy = h(x) + k(y) over the (0, 0) isotope."""
    res = CheckResult("one-sided-linear: h (resp. k) is affine over the isotope group")
    for t in tables:
        fr = check_identity(t, IdentityName.FR)
        fl = check_identity(t, IdentityName.FL)
        if not (fr or fl) or not check_isotope_assoc(t, 0, 0):
            continue
        grp = GroupTable.from_table(principal_isotope(t, 0, 0, IsotopeConvention.SEC4))
        z = grp.neutral
        h = t.cells[:, 0]
        k = t.cells[0, :]
        x = np.arange(t.n)[:, None]
        y = np.arange(t.n)[None, :]
        res.instances += 1
        if fr:
            lhs = h[grp.add(x, y)]
            rhs = grp.add(grp.sub(h[x], h[z]), h[y])
            if not (lhs == rhs).all():
                res.fail(f"h law on {t!r}")
        if fl:
            lhs = k[grp.add(x, y)]
            rhs = grp.add(grp.sub(k[x], k[z]), k[y])
            if not (lhs == rhs).all():
                res.fail(f"k law on {t!r}")
    return res


def one_sided_linear(rng: np.random.Generator, count: int) -> list[CayleyTable]:
    """Linear quasigroups over nonabelian catalog groups with arbitrary automorphisms."""
    cat = group_catalog()
    groups = [cat[k] for k in ("D3", "D4", "Q8")]
    out = []
    for _ in range(count):
        g = groups[rng.integers(len(groups))]
        auts = automorphisms(g)
        f = auts[rng.integers(len(auts))]
        gg = auts[rng.integers(len(auts))]
        out.append(build_linear(g, f, gg, int(rng.integers(g.n))))
    return out


def check_forms(tables: Sequence[CayleyTable]) -> CheckResult:
    """FG <=> extract_form at (0, 0) succeeds <=> a strong form exists; |forms| = n; |strong| = |M(Q)|."""
    res = CheckResult("form-count: forms exist iff FG; n forms, |M(Q)| strong")
    for t in tables:
        res.instances += 1
        fg = is_FG(t)
        try:
            extract_form(t, 0, 0)
            extracted = True
        except NotFGError:
            extracted = False
        if not fg:
            if extracted:
                res.fail(f"form extracted from non-FG {t!r}")
            continue
        forms = enumerate_forms(t)
        strong = [f for f in forms if f.is_strong()]
        if not extracted or not strong:
            res.fail(f"FG table without forms {t!r}")
        if [f.neutral for f in forms] != list(range(t.n)) or len(strong) != len(mq(t)):
            res.fail(f"form count mismatch on {t!r}")
        if sorted(f.neutral for f in strong) != sorted(mq(t)):
            res.fail(f"strong neutrals differ from M(Q) on {t!r}")
    return res


def check_rigid(tables: Sequence[CayleyTable], rng: np.random.Generator, collisions: int = 10) -> CheckResult:
    res = CheckResult("form-rigidity: forms with the same neutral coincide")
    for t in tables:
        if not is_FG(t):
            continue
        res.instances += 1
        rd = right_division(t)
        for _ in range(collisions):
            a, b, a2 = (int(v) for v in rng.integers(t.n, size=3))
            q = t.mul(b, a)
            b2 = int(rd[a2, q])  # b2 . a2 == q
            if extract_form(t, a, b) != extract_form(t, a2, b2):
                res.fail(f"(a, b) = ({a}, {b}) vs ({a2}, {b2}) on {t!r}")
    return res


# -- M(Q) and simplicity ---------------------------------------------------------

def check_structure(tables: Sequence[CayleyTable]) -> CheckResult:
    res = CheckResult("mq-structure: M = Z - e, alpha/beta images in M, M medial subquasigroup, Q/M a group")
    for t in tables:
        if not is_FG(t):
            continue
        res.instances += 1
        m = mq(t)
        if m != mq_via_form(extract_form(t, 0, 0)) or m != mq_three_variable(t):
            res.fail(f"M(Q) characterizations differ on {t!r}")
        for form in enumerate_forms(t):
            Z = center(form.group)
            conds = (m == Z, form.e in Z, form.neutral in m)
            if len(set(conds)) != 1:
                res.fail(f"M-equiv at neutral {form.neutral} on {t!r}")
        rep = structure_report(t)
        if not rep.all_hold:
            res.fail(f"{rep} on {t!r}")
    return res


def check_simple(tables: Sequence[CayleyTable]) -> CheckResult:
    res = CheckResult("simple-dichotomy: simple FG-quasigroups are medial or groups")
    simple = 0
    for t in tables:
        if t.n < 2 or not is_FG(t):
            continue
        res.instances += 1
        kind = classify_simple(t).kind
        simple += kind is not Simplicity.NOT_SIMPLE
        if kind is Simplicity.VIOLATION:
            res.fail(f"{t!r}")
    res.extra["simple"] = simple
    return res


# -- modules and homomorphisms ----------------------------------------------------

def check_mod_equiv(tables: Sequence[CayleyTable], rng: np.random.Generator, random_modules: int) -> CheckResult:
    res = CheckResult("module-equivalence: sigma.rho and rho.sigma are identities; central point <=> central e")
    for t in tables:
        if not is_FG(t):
            continue
        m = mq(t)
        for p in range(t.n):
            pq = PointedQuasigroup(t, p)
            pm = rho(pq)
            res.instances += 1
            if sigma(pm) != pq:
                res.fail(f"sigma(rho) at point {p} on {t!r}")
            if rho(sigma(pm)) != pm:
                res.fail(f"rho(sigma) at point {p} on {t!r}")
            if (p in m) != pm.is_centrally_pointed():
                res.fail(f"central pointing at {p} on {t!r}")
    for pm in random_pointed_modules(rng, random_modules):
        res.instances += 1
        pq = sigma(pm)
        if rho(pq) != pm or sigma(rho(pq)) != pq:
            res.fail(f"round trip of random module {pm}")
        if (pq.point in mq(pq.table)) != pm.is_centrally_pointed():
            res.fail(f"central pointing of random module {pm}")
    return res


def random_pointed_modules(rng: np.random.Generator, count: int,
                           groups: dict[str, GroupTable] | None = None) -> list[PointedModule]:
    """Modules built directly from generator maps ``x -> -x + f(x)`` for random admissible f, g."""
    groups = groups or group_catalog()
    out = []
    for d in random_linear(groups, int(rng.integers(2**31)), count, constrained=True):
        pm = module_from_form(ArithmeticForm(d.group, d.f, d.g, d.e))
        if not check_module(pm.module):
            raise AssertionError(f"generated module is invalid: {check_module(pm.module)}")
        out.append(pm)
    return out


def constructed_homomorphisms(t: CayleyTable):
    """Known quasigroup homomorphisms out of an FG table ``t``: (map, target table)."""
    n = t.n
    yield tuple(range(n)), t
    alpha, beta = alpha_beta(t)
    yield alpha, t
    yield beta, t
    p = mq_congruence(t)
    yield p.projection(), quotient(t, p)
    for q in range(n):
        if t.mul(q, q) == q:
            yield (q,) * n, t


def check_homom_forms(tables: Sequence[CayleyTable], rng: np.random.Generator, count: int) -> CheckResult:
    res = CheckResult("hom-forms: quasigroup hom <=> form hom (basepoint preserving)")
    fg = [t for t in tables if is_FG(t)]
    trues = 0
    if not fg:
        return res
    for t in fg:
        for m, target in constructed_homomorphisms(t):
            p = int(rng.integers(t.n))
            q = int(m[p])
            verdict = is_homomorphism(m, t, target)
            other = is_form_homomorphism(m, form_at_neutral(t, p), form_at_neutral(target, q))
            res.instances += 1
            trues += verdict
            if not verdict or verdict != other:
                res.fail(f"constructed map {m} on {t!r}")
    for _ in range(count):
        s = fg[rng.integers(len(fg))]
        t = fg[rng.integers(len(fg))]
        p = int(rng.integers(s.n))
        q = int(rng.integers(t.n))
        m = rng.integers(t.n, size=s.n)
        m[p] = q
        verdict = is_homomorphism(m, s, t)
        res.instances += 1
        trues += verdict
        if verdict != is_form_homomorphism(tuple(int(v) for v in m), form_at_neutral(s, p), form_at_neutral(t, q)):
            res.fail(f"random map {m.tolist()} from {s!r} to {t!r}")
    res.extra["true_cases"] = trues
    return res


def run_battery(cfg: ReplayConfig) -> tuple[Corpus, list[CheckResult]]:
    rng = np.random.default_rng(cfg.seed)
    corpus = build_corpus(cfg)
    stacks = list(corpus.all_stacks())
    small = [t for n, s in corpus.stacks.items() if n <= 4 for t in _tables(s)]
    big_f = corpus.selected(lambda T: batch_is_F(T)) if 5 in corpus.stacks else []
    big_f = [t for t in big_f if t.n == 5]
    tables = small + big_f + corpus.linear
    fg_tables = [t for t in tables if is_FG(t)]
    results = [
        check_fg_equivalence(stacks),
        check_fas_fg(stacks),
        check_a_implies_f(stacks),
        check_group_iso(stacks),
        check_left_f_basics(tables, rng),
        check_commute(tables),
        check_fg_translation_char([t for t in tables if t.n <= 8]),
        check_rearrange_battery(tables),
        check_f_char_linear(rng, 60),
        check_rf_lf_linear(tables + one_sided_linear(rng, 60)),
        check_forms(tables),
        check_rigid(fg_tables, rng),
        check_structure(fg_tables),
        check_simple(fg_tables),
        check_mod_equiv(fg_tables, rng, cfg.random_modules),
        check_homom_forms(fg_tables, rng, cfg.homomorphism_maps),
    ]
    return corpus, results
