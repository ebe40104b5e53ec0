"""Property suites: every invariant the library promises, run as data.

Each suite function takes a SuiteConfig and returns a record dict with the
property name, the number of instances checked and a list of failure
payloads (empty when the property holds).  The CLI `verify` subcommand and
the acceptance tests both drive these.
"""

import itertools
import random
from dataclasses import dataclass, field

from . import partitions as pt
from .benderknuth import apply_bk_word, bk, t_word, z_word
from .bijections import (
    PlaneFunction,
    burge,
    chi,
    evacuation_of_canonical,
    gamma_inverse,
    gamma_map,
    hillman_grassl,
    hillman_grassl_inverse,
    lr_membership,
    octahedral,
    pattern_graft,
    phi_lr,
    phi_lr_inverse,
    psi,
    rho1,
    rho2,
    rho2_prime,
    rho3,
    rsk,
    tau_inverse,
    tau_map,
    xi,
    xi_normal,
    zeta,
    zeta_lr,
    zeta_normal,
)
from .circuits import CostReport, bit_size, evaluate, reference_map, registry, verify_reduction
from .matrices import rotate_matrix, transpose
from .oracles import (
    conjecture1_probe,
    conjecture3_count_probe,
    enumerate_lr,
    enumerate_tableaux,
    lr_coefficient,
    lr_instances,
    naive_bk,
    naive_jdt,
    naive_rsk,
    partitions_of,
    partitions_upto,
    rsk_inverse,
    sub_partitions,
)
from .tableaux import (
    Tableau,
    attach,
    canonical,
    is_lr,
    recording_matrix,
    rotate180,
    rotate180_skew,
    split_at_value,
    tableau_from_recording,
    tableau_from_rows,
    widen,
    word,
)


@dataclass
class SuiteConfig:
    """Bounds for the exhaustive runs; defaults reproduce the acceptance
    criteria exactly."""

    max_size: int = 6
    max_len: int = 3
    max_value: int = 4
    pair_size: int = 5
    pair_value: int = 2
    rho_size: int = 8
    rho_len: int = 4
    tau_size: int = 6
    seed: int = 2024
    suites: tuple = ()


def _record(name, instances, failures):
    return {
        "property": name,
        "instances": instances,
        "failures": failures[:20],
        "failure_count": len(failures),
        "pass": not failures,
    }


def _tableau_suite(cfg, max_value=None):
    k = cfg.max_value if max_value is None else max_value
    for lam in partitions_upto(cfg.max_size, cfg.max_len):
        if not lam:
            continue
        for mu in sub_partitions(lam):
            yield from enumerate_tableaux(lam, mu, max_value=k)


def _pair_suite(cfg):
    for lam in partitions_upto(cfg.pair_size, cfg.max_len):
        if not lam:
            continue
        for piv in sub_partitions(lam):
            for mu in sub_partitions(piv):
                for b in enumerate_tableaux(piv, mu, max_value=cfg.pair_value):
                    for a in enumerate_tableaux(lam, piv, max_value=cfg.pair_value):
                        yield b, a


def _matrix_suite(sizes=(2, 3), emax=2):
    for k in sizes:
        for vals in itertools.product(range(emax + 1), repeat=k * k):
            yield tuple(tuple(vals[i * k:(i + 1) * k]) for i in range(k))


def _filling_suite(shapes, emax):
    for shape in shapes:
        n = sum(shape)
        for vals in itertools.product(range(emax + 1), repeat=n):
            rows, idx = [], 0
            for r in shape:
                rows.append(tuple(vals[idx:idx + r]))
                idx += r
            yield PlaneFunction(shape, tuple(rows))


def _payload(*parts):
    out = []
    for p in parts:
        if isinstance(p, Tableau):
            out.append({"outer": list(p.outer), "inner": list(p.inner), "rows": p.rows()})
        elif isinstance(p, PlaneFunction):
            out.append({"shape": list(p.shape), "values": [list(r) for r in p.values]})
        else:
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# suites


def suite_tableau_core(cfg: SuiteConfig):
    failures = []
    n = 0
    for t in _tableau_suite(cfg):
        n += 1
        counts = {}
        for x in word(t):
            counts[x] = counts.get(x, 0) + 1
        w = t.weight()
        if any(counts.get(j + 1, 0) != w[j] for j in range(t.k)):
            failures.append(_payload("weight/word disagree", t))
        if tableau_from_recording(t.outer, t.inner, recording_matrix(t), k=t.k) != t:
            failures.append(_payload("recording round trip", t))
        for r in (0, 1, t.k):
            low, high = split_at_value(t, r)
            if attach(low, high) != t:
                failures.append(_payload("attach/split round trip", t, r))
        if t.is_normal():
            if rotate180_skew(rotate180(t)) != t:
                failures.append(_payload("rotation not involutive", t))
    for lam in partitions_upto(cfg.max_size, cfg.max_len):
        if not is_lr(canonical(lam)):
            failures.append(_payload("canonical not dominant", list(lam)))
        if not lam:
            continue
        for nu in partitions_of(sum(lam), max_len=cfg.max_len):
            count = lr_coefficient(lam, (), nu)
            if (count > 0) != (nu == lam) or count > 1:
                failures.append(_payload("straight-shape dominant count", list(lam), list(nu)))
    return _record("tableau_core", n, failures)


def suite_bk_relations(cfg: SuiteConfig):
    failures = []
    n = 0
    for t in _tableau_suite(cfg):
        n += 1
        m = t.k
        for r in range(1, m):
            b1 = bk(t, r)
            if b1 != naive_bk(t, r):
                failures.append(_payload("toggle oracle mismatch", t, r))
            if bk(b1, r) != t:
                failures.append(_payload("generator not involutive", t, r))
            w, w1 = list(t.weight()), list(b1.weight())
            w[r - 1], w[r] = w[r], w[r - 1]
            if w != w1:
                failures.append(_payload("weight swap wrong", t, r))
        for i in range(1, m):
            for j in range(i + 2, m):
                if bk(bk(t, i), j) != bk(bk(t, j), i):
                    failures.append(_payload("distant generators do not commute", t, i, j))
        if apply_bk_word(apply_bk_word(t, z_word(m)), z_word(m)) != t:
            failures.append(_payload("reversal word not involutive", t))
        for r in range(m + 1):
            s = m - r
            if apply_bk_word(apply_bk_word(t, t_word(r, s)), t_word(s, r)) != t:
                failures.append(_payload("block exchange words not inverse", t, r))
            lhs = apply_bk_word(t, z_word(m))
            rhs = apply_bk_word(
                apply_bk_word(apply_bk_word(t, z_word(r)), t_word(r, s)), z_word(s)
            )
            if lhs != rhs:
                failures.append(_payload("factorization of the reversal word", t, r))
    return _record("bk_relations", n, failures)


def suite_oracle_equivalence(cfg: SuiteConfig):
    failures = []
    n = 0
    for t in _tableau_suite(cfg):
        n += 1
        p = psi(t)
        if p != naive_jdt(t):
            failures.append(_payload("rectification oracle mismatch", t))
        if naive_jdt(t, corner_order="last") != p:
            failures.append(_payload("square moves depend on corner order", t))
    for v in _matrix_suite():
        n += 1
        if rsk(v) != naive_rsk(v):
            failures.append(_payload("insertion oracle mismatch", [list(r) for r in v]))
        b, a = naive_rsk(v)
        if rsk_inverse(b, a) != v:
            failures.append(_payload("reverse insertion mismatch", [list(r) for r in v]))
    return _record("oracle_equivalence", n, failures)


def suite_map_identities(cfg: SuiteConfig):
    failures = []
    n = 0
    for t in _tableau_suite(cfg):
        n += 1
        w = t.weight()
        rect = psi(t)
        # reversal facts
        c = chi(t)
        if chi(c) != t:
            failures.append(_payload("reversal not involutive", t))
        if pt.pad(c.weight(), t.k) != pt.reverse_vector(pt.pad(w, t.k)):
            failures.append(_payload("reversal weight", t))
        # evacuation facts
        e = xi(t)
        if xi(e) != t:
            failures.append(_payload("evacuation not involutive", t))
        if t.is_normal():
            if e != psi(rotate180(t)):
                failures.append(_payload("evacuation vs rotated rectification", t))
            if c != e:
                failures.append(_payload("reversal vs evacuation on normal shapes", t))
        # rectification with witness
        a1, c1 = phi_lr(t)
        if a1 != rect:
            failures.append(_payload("witness map first component", t))
        if not is_lr(c1) or phi_lr_inverse(a1, c1) != t:
            failures.append(_payload("witness map round trip", t))
        wp = t.weight_partition()
        if is_lr(t) != (pt.is_partition(wp) and rect == canonical(wp)):
            failures.append(_payload("dominance characterization", t))
    for b, a in _pair_suite(cfg):
        n += 1
        a1, b1 = zeta(b, a)
        if b.is_normal() and a1 != naive_jdt(a):
            failures.append(_payload("switching vs rectification", b, a))
        if zeta(a1, b1) != (b, a):
            failures.append(_payload("switching not involutive", b, a))
        if a1.weight() != a.weight() or b1.weight() != b.weight():
            failures.append(_payload("switching weights", b, a))
        if is_lr(b) and is_lr(a) and not (is_lr(a1) and is_lr(b1)):
            failures.append(_payload("switching off the dominant class", b, a))
    for v in _matrix_suite(sizes=(2, 3), emax=2):
        n += 1
        pair = rsk(v)
        if rsk(transpose(v)) != (pair[1], pair[0]):
            failures.append(_payload("transpose duality", [list(r) for r in v]))
        if rsk(rotate_matrix(v)) != (xi(pair[0]), xi(pair[1])):
            failures.append(_payload("rotation/evacuation symmetry", [list(r) for r in v]))
        bb, ba = burge(v)
        if pt.trim(bb.outer) != pt.trim(ba.outer):
            failures.append(_payload("column insertion shapes differ", [list(r) for r in v]))
        if burge(tuple(reversed(v)))[0] != pair[0]:
            failures.append(_payload("row flip relates the insertions", [list(r) for r in v]))
    return _record("map_identities", n, failures)


def suite_symmetry_maps(cfg: SuiteConfig):
    failures = []
    n = 0
    for lam, mu, nu, t in lr_instances(cfg.rho_size, cfg.rho_len):
        n += 1
        r1 = rho1(t)
        if rho1(r1) != t:
            failures.append(_payload("first symmetry not involutive", t))
        if pt.trim(r1.inner) != pt.trim(nu) or r1.weight_partition() != pt.trim(mu):
            failures.append(_payload("first symmetry shape contract", t))
        g = gamma_map(t)
        if not lr_membership(g, mu, nu, lam, starred=True):
            failures.append(_payload("reindexing misses the starred set", t))
        if gamma_inverse(g, lam) != t:
            failures.append(_payload("reindexing round trip", t))
        tt = tau_map(t)
        if not lr_membership(tt, nu, mu, lam, starred=False):
            failures.append(_payload("companion misses the plain set", t))
        if tau_inverse(tt, lam) != t:
            failures.append(_payload("companion round trip", t))
        if xi_normal(g) != chi(g) or not lr_membership(xi_normal(g), mu, nu, lam):
            failures.append(_payload("evacuation between the two set families", t))
        if rho2_prime(rho2(t)) != t:
            failures.append(_payload("second symmetry pair not inverse", t))
        if rho3(rho3(t)) != t:
            failures.append(_payload("third symmetry not involutive", t))
    return _record("symmetry_maps", n, failures)


def suite_symmetry_agreement(cfg: SuiteConfig):
    report = conjecture1_probe(cfg.rho_size, cfg.rho_len)
    return _record("symmetry_agreement", report["instances"], report["mismatches"])


def suite_counts(cfg: SuiteConfig):
    failures = []
    n = 0
    for lam in partitions_upto(cfg.rho_size, cfg.rho_len):
        if not lam:
            continue
        for mu in sub_partitions(lam):
            for nu in partitions_of(sum(lam) - sum(mu), max_len=cfg.rho_len):
                n += 1
                c1 = lr_coefficient(lam, mu, nu)
                c2 = lr_coefficient(lam, nu, mu)
                plain = sum(
                    1
                    for b in enumerate_tableaux(
                        mu, (), max_value=max(len(lam), 1),
                        weight=pt.vector_sub(lam, pt.pad(nu, len(lam))),
                    )
                    if lr_membership(b, mu, nu, lam)
                ) if pt.contains(lam, nu) else 0
                starred = sum(
                    1
                    for b in enumerate_tableaux(
                        mu, (), max_value=max(len(lam), 1),
                        weight=pt.reverse_vector(pt.vector_sub(lam, pt.pad(nu, len(lam)))),
                    )
                    if lr_membership(b, mu, nu, lam, starred=True)
                ) if pt.contains(lam, nu) else 0
                if not (c1 == c2 == plain == starred):
                    failures.append(
                        [list(lam), list(mu), list(nu), c1, c2, plain, starred]
                    )
    probe = conjecture3_count_probe(cfg.tau_size)
    n += probe["instances"]
    failures.extend(probe["mismatches"])
    return _record("counts", n, failures)


def suite_octahedral(cfg: SuiteConfig):
    failures = []
    n = 0
    seen_inputs = {}
    for tau in partitions_upto(cfg.tau_size, cfg.max_len):
        if not tau:
            continue
        for sigma in sub_partitions(tau):
            for lam in sub_partitions(sigma):
                for mu in partitions_of(sum(sigma) - sum(lam), max_len=cfg.max_len):
                    for nu in partitions_of(sum(tau) - sum(sigma), max_len=cfg.max_len):
                        for a in enumerate_lr(sigma, lam, mu):
                            for b in enumerate_lr(tau, sigma, nu):
                                n += 1
                                b1, d = octahedral(a, b)
                                piv = pt.trim(b1.outer)
                                ok = (
                                    is_lr(b1)
                                    and is_lr(d)
                                    and pt.trim(b1.inner) == pt.trim(mu)
                                    and b1.weight_partition() == pt.trim(nu)
                                    and pt.trim(d.inner) == pt.trim(lam)
                                    and d.weight_partition() == piv
                                    and pt.trim(d.outer) == pt.trim(tau)
                                )
                                if not ok:
                                    failures.append(_payload("membership contract", a, b))
                                key = (tau, lam, mu, nu, b1._key(), d._key())
                                if key in seen_inputs:
                                    failures.append(_payload("not injective", a, b))
                                seen_inputs[key] = (a, b)
    return _record("octahedral", n, failures)


def suite_reductions(cfg: SuiteConfig):
    failures = []
    n = 0
    domains = _reduction_domains(cfg)
    for name, red in registry().items():
        for inst in domains[red.domain]:
            n += 1
            if not verify_reduction(red, inst):
                failures.append([name, repr(inst)])
    return _record("reductions", n, failures)


def _reduction_domains(cfg: SuiteConfig):
    skew = []
    normals = []
    for lam in partitions_upto(cfg.pair_size, cfg.max_len):
        if not lam:
            continue
        for mu in sub_partitions(lam):
            for t in enumerate_tableaux(lam, mu, max_value=3):
                skew.append(t)
                if t.is_normal():
                    normals.append(t)
    pairs = list(_pair_suite(cfg))
    normal_pairs = [(b, a) for b, a in pairs if b.is_normal()]
    lr_pairs = [(b, a) for b, a in pairs if is_lr(b) and is_lr(a)]
    lr = [t for _, _, _, t in lr_instances(cfg.max_size, cfg.max_len)]
    mats = list(_matrix_suite(sizes=(2,), emax=2)) + list(_matrix_suite(sizes=(3,), emax=1))
    fillings = list(_filling_suite([(2, 2)], 2)) + list(_filling_suite([(3, 3, 3)], 1))
    return {
        "matrices": mats,
        "skew": skew,
        "normal": normals,
        "pairs": pairs,
        "normal_pairs": normal_pairs,
        "lr": lr,
        "lr_pairs": lr_pairs,
        "square_fillings": fillings,
    }


def suite_cost_graph(cfg: SuiteConfig):
    from .circuits import THEOREM_MAPS, cost, max_pairwise_cost, min_cost

    failures = []
    n = 0
    for name, red in registry().items():
        n += 1
        if cost(red.circuit) != red.declared_cost:
            failures.append([name, "static cost disagrees with declared"])
    expected = {
        ("rsk", "psi"): 2,
        ("psi", "phi_lr"): 1,
        ("phi_lr", "zeta_normal"): 2,
        ("zeta", "xi"): 3,
        ("zeta_normal", "xi_normal"): 3,
        ("xi_normal", "rsk"): 1,
        ("rho1", "zeta_normal"): 1,
        ("zeta_normal", "zeta"): 1,
        ("zeta", "zeta_lr"): 1,
        ("zeta_lr", "rho1"): 3,
        ("zeta", "zeta_normal"): 2,
        ("rho2", "xi_normal"): 1,
        ("xi_normal", "rho2"): 1,
        ("xi_normal", "chi"): 1,
        ("chi", "xi_normal"): 3,
        ("octahedral", "zeta"): 3,
        ("rsk", "burge"): 2,
        ("burge", "rsk"): 2,
    }
    by_pair = {}
    for red in registry().values():
        key = (red.source, red.base)
        by_pair[key] = min(by_pair.get(key, 99), red.declared_cost)
    for key, want in expected.items():
        n += 1
        if by_pair.get(key) != want:
            failures.append([list(key), "declared", by_pair.get(key), "expected", want])
    worst, pair = max_pairwise_cost()
    n += 1
    if worst != 36 or pair != ("chi", "rho1"):
        failures.append(["worst pairwise cost", worst, list(pair or ())])
    for s in THEOREM_MAPS:
        for t in THEOREM_MAPS:
            if s != t:
                n += 1
                if min_cost(s, t) > 36:
                    failures.append(["cost bound exceeded", s, t, min_cost(s, t)])
    return _record("cost_graph", n, failures)


def suite_hook_profiles(cfg: SuiteConfig):
    failures = []
    n = 0
    for shape in [(2, 1), (2, 2), (3, 1)]:
        seen = {}
        for f in _filling_suite([shape], 2):
            n += 1
            g = hillman_grassl(f)
            if not g.is_reverse_plane_partition():
                failures.append(_payload("output not weakly increasing", f, g))
            if g.alpha_profile() != f.beta_profile():
                failures.append(_payload("profile not preserved", f, g))
            if g.values in seen:
                failures.append(_payload("not injective", f))
            seen[g.values] = f
            if hillman_grassl_inverse(g) != f:
                failures.append(_payload("round trip", f, g))
    return _record("hook_profiles", n, failures)


def suite_size_neutrality(cfg: SuiteConfig):
    """Largest output/input bit ratio per map over the suites."""
    ratios = {}

    def feed(name, fn, instances):
        worst = 0.0
        for inst in instances:
            ib = bit_size(inst)
            ob = bit_size(fn(inst))
            r = CostReport(0, ib, ob).size_ratio()
            worst = max(worst, r)
        ratios[name] = round(worst, 3)

    cfg_small = SuiteConfig(max_size=cfg.pair_size, max_len=cfg.max_len, max_value=3,
                            pair_size=cfg.pair_size, pair_value=cfg.pair_value)
    skew = list(_tableau_suite(cfg_small, max_value=3))
    normals = [t for t in skew if t.is_normal()]
    pairs = list(_pair_suite(cfg_small))
    lr = [t for _, _, _, t in lr_instances(6, 3)]
    lr_pairs = [(b, a) for b, a in pairs if is_lr(b) and is_lr(a)]
    mats = list(_matrix_suite(sizes=(2, 3), emax=2))
    fillings = list(_filling_suite([(2, 2), (2, 1), (3, 1)], 2))
    feed("xi", xi, skew)
    feed("chi", chi, skew)
    feed("psi", psi, skew)
    feed("phi_lr", phi_lr, skew)
    feed("xi_normal", xi_normal, normals)
    feed("zeta", lambda p: zeta(*p), pairs)
    feed("zeta_normal", lambda p: zeta_normal(*p), [(b, a) for b, a in pairs if b.is_normal()])
    feed("zeta_lr", lambda p: zeta_lr(*p), lr_pairs)
    feed("octahedral", lambda p: octahedral(*p), lr_pairs)
    feed("rho1", rho1, lr)
    feed("rho2", rho2, lr)
    feed("rho2_prime", rho2_prime, lr)
    feed("rho3", rho3, lr)
    feed("gamma", gamma_map, lr)
    feed("tau", tau_map, lr)
    feed("rsk", rsk, mats)
    feed("burge", burge, mats)
    feed("hillman_grassl", hillman_grassl, fillings)
    failures = [[name, r] for name, r in ratios.items() if r >= 4.0]
    rec = _record("size_neutrality", len(ratios), failures)
    rec["ratios"] = ratios
    rec["max_ratio"] = max(ratios.values())
    return rec


def random_tableau(rng: random.Random, max_size=40, max_len=8, max_value=8, skew=True):
    """GT-pattern sampler used by the fuzz suite: random shape, then a
    greedy random filling (retrying on dead ends)."""
    top = max(1, (2 * max_size) // max_len)
    for _ in range(500):
        nparts = rng.randint(1, max_len)
        lam = pt.trim(tuple(sorted((rng.randint(1, top) for _ in range(nparts)), reverse=True)))
        if not lam or sum(lam) > max_size:
            continue
        mu = ()
        if skew and rng.random() < 0.7:
            mu = tuple(sorted((rng.randint(0, p) for p in lam), reverse=True))
            mu = pt.trim(tuple(min(m, lam[i]) for i, m in enumerate(mu)))
        outer, inner = pt.check_skew(lam, mu)
        grid = {}
        rows = []
        ok = True
        for i in range(len(outer)):
            row = []
            for j in range(inner[i] + 1, outer[i] + 1):
                lo = 1
                if row:
                    lo = max(lo, row[-1])
                above = grid.get((i - 1, j))
                if above is not None:
                    lo = max(lo, above + 1)
                if lo > max_value:
                    ok = False
                    break
                v = rng.randint(lo, max_value)
                grid[(i, j)] = v
                row.append(v)
            if not ok:
                break
            rows.append(row)
        if not ok:
            continue
        return tableau_from_rows(outer, inner, rows, max_value=max_value)
    raise RuntimeError("sampler failed to produce a tableau")


def suite_fuzz(cfg: SuiteConfig):
    rng = random.Random(cfg.seed)
    failures = []
    n = 0
    for _ in range(60):
        t = random_tableau(rng)
        n += 1
        if xi(xi(t)) != t:
            failures.append(_payload("evacuation not involutive", t))
        if chi(chi(t)) != t:
            failures.append(_payload("reversal not involutive", t))
        low, high = split_at_value(t, rng.randint(0, t.k))
        if attach(low, high) != t:
            failures.append(_payload("attach/split round trip", t))
    for _ in range(40):
        t = random_tableau(rng, max_size=24, max_len=5, max_value=6)
        r = rng.randint(0, t.k)
        low, high = split_at_value(t, r)
        from .tableaux import shift_values

        b, a = low, shift_values(high, -r)
        n += 1
        a1, b1 = zeta(b, a)
        if zeta(a1, b1) != (b, a):
            failures.append(_payload("switching not involutive", b, a))
        if a1.weight() != a.weight() or b1.weight() != b.weight():
            failures.append(_payload("switching weights", b, a))
    return _record("fuzz", n, failures)


SUITES = {
    "tableau_core": suite_tableau_core,
    "bk_relations": suite_bk_relations,
    "oracle_equivalence": suite_oracle_equivalence,
    "map_identities": suite_map_identities,
    "symmetry_maps": suite_symmetry_maps,
    "symmetry_agreement": suite_symmetry_agreement,
    "counts": suite_counts,
    "octahedral": suite_octahedral,
    "reductions": suite_reductions,
    "cost_graph": suite_cost_graph,
    "hook_profiles": suite_hook_profiles,
    "size_neutrality": suite_size_neutrality,
    "fuzz": suite_fuzz,
}


def run_suites(cfg: SuiteConfig, names=None):
    names = list(names or SUITES)
    return [SUITES[name](cfg) for name in names]
