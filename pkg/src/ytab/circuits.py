"""Cost-accounted reduction circuits.

A circuit is a tree over linear-cost steps and calls to one pluggable base
map.  Node kinds:

* LinearStep(name)             -- one catalogued linear-cost function
* BaseCall()                   -- apply the base map to the flowing value
* Trivial(pre, post)           -- pre splits off (base input, context),
                                  the base runs once, post recombines
* Sequential(first, second)    -- function composition
* Parallel(pre, left, right, post) -- pre fans out a pair, branches run
                                  independently, post joins
* OnFirst(sub)                 -- run a subcircuit on the first component
                                  of a (value, context) pair (appears when
                                  reductions are composed)

The cost of a circuit is its number of base calls; composing an s1-cost
reduction with an s2-cost one yields cost s1*s2 by substituting the inner
circuit for every base call.

Step functions live in a closed catalogue so the linear-cost claim stays
auditable; every step is built from canonical-tableau construction,
compose/attach/split/shift framing, matrix flips, recording-matrix
reindexings and the closed-form evacuation of canonicals.
"""

from dataclasses import dataclass
from typing import Callable, Union

from . import partitions as pt
from .bijections import (
    PlaneFunction,
    burge,
    chi,
    evacuation_of_canonical,
    gamma_inverse,
    gamma_map,
    hillman_grassl,
    octahedral,
    pattern_graft,
    phi_lr,
    psi,
    rho1,
    rho2,
    rsk,
    tau_inverse,
    tau_map,
    xi,
    xi_normal,
    zeta,
    zeta_lr,
    zeta_normal,
)
from .errors import MapMismatch, NotSquare, ShapeMismatch, Unreachable
from .matrices import flip_cols, flip_rows
from .tableaux import (
    Tableau,
    attach,
    canonical,
    compose,
    pad_rows,
    prepend_rows,
    recording_matrix,
    shift_values,
    split_at_value,
    take_rows,
    widen,
)


# ---------------------------------------------------------------------------
# circuit nodes


@dataclass(frozen=True)
class LinearStep:
    name: str


@dataclass(frozen=True)
class BaseCall:
    pass


@dataclass(frozen=True)
class Trivial:
    pre: str
    post: str


@dataclass(frozen=True)
class Sequential:
    first: "Circuit"
    second: "Circuit"


@dataclass(frozen=True)
class Parallel:
    pre: str
    left: "Circuit"
    right: "Circuit"
    post: str


@dataclass(frozen=True)
class OnFirst:
    sub: "Circuit"


Circuit = Union[LinearStep, BaseCall, Trivial, Sequential, Parallel, OnFirst]


def seq(*circuits) -> Circuit:
    out = circuits[0]
    for c in circuits[1:]:
        out = Sequential(out, c)
    return out


def cost(circuit) -> int:
    """Static base-call count."""
    if isinstance(circuit, LinearStep):
        return 0
    if isinstance(circuit, (BaseCall, Trivial)):
        return 1
    if isinstance(circuit, Sequential):
        return cost(circuit.first) + cost(circuit.second)
    if isinstance(circuit, Parallel):
        return cost(circuit.left) + cost(circuit.right)
    if isinstance(circuit, OnFirst):
        return cost(circuit.sub)
    raise TypeError(f"not a circuit node: {circuit!r}")


# ---------------------------------------------------------------------------
# bit-size accounting


def _flat_ints(value):
    if isinstance(value, bool):
        return []
    if isinstance(value, int):
        return [value]
    if isinstance(value, Tableau):
        # the natural array presentation: per-row value counts plus the
        # inner shape column
        out = [m for m in value.inner]
        for row in recording_matrix(value):
            out.extend(row)
        return out
    if isinstance(value, PlaneFunction):
        return [x for row in value.values for x in row]
    if isinstance(value, (tuple, list)):
        out = []
        for v in value:
            out.extend(_flat_ints(v))
        return out
    if value is None:
        return []
    raise TypeError(f"cannot measure {type(value).__name__}")


def bit_size(value) -> int:
    """n * ceil(log2(m) + 1) for an n-entry array with maximum m."""
    xs = _flat_ints(value)
    if not xs:
        return 0
    m = max(1, max(abs(x) for x in xs))
    per = m.bit_length() + (0 if m & (m - 1) == 0 else 1)
    return len(xs) * per


@dataclass(frozen=True)
class CostReport:
    base_calls: int
    input_bits: int
    output_bits: int

    def size_ratio(self) -> float:
        if self.input_bits == 0:
            return 1.0 if self.output_bits == 0 else float(self.output_bits)
        return self.output_bits / self.input_bits


# ---------------------------------------------------------------------------
# the step catalogue

STEPS: dict = {}


def step(name: str):
    def register(fn):
        STEPS[name] = fn
        return fn

    return register


def run_step(name: str, value):
    from .errors import DomainError

    try:
        return STEPS[name](value)
    except DomainError as exc:
        exc.args = (f"{exc.args[0]} [in step {name}]",) + exc.args[1:]
        raise


@step("identity")
def _identity(v):
    return v


@step("as_base_input")
def _as_base_input(v):
    return v, None


@step("result_only")
def _result_only(v):
    return v[0]


@step("first_component")
def _first_component(v):
    out, _ = v
    return out[0]


@step("second_component")
def _second_component(v):
    out, _ = v
    return out[1]


def _common_bound(*tabs):
    k = 0
    for t in tabs:
        k = max(k, t.k, len(pt.trim(t.outer)))
    return k


# -- row/column correspondence from rectifications ---------------------------


def _staircase_tableau(sums, counts, k):
    from .bijections import _staircase
    from .tableaux import tableau_from_recording

    outer, inner = _staircase(sums)
    return tableau_from_recording(outer, inner, counts, k=k)


@step("staircase_pair")
def _staircase_pair(v):
    from .matrices import check_matrix, col_sums, row_sums, transpose

    v = check_matrix(v)
    k = len(v)
    y = _staircase_tableau(row_sums(v), flip_rows(v), k)
    x = _staircase_tableau(col_sums(v), flip_rows(transpose(v)), k)
    return y, x


@step("pair_of_results")
def _pair_of_results(v):
    return v[0], v[1]


# -- evacuation from the correspondence --------------------------------------


@step("column_flipped_recording")
def _column_flipped_recording(v):
    if not v.is_normal():
        raise ShapeMismatch("normal shape required")
    k = v.k
    ell = len(pt.trim(v.outer))
    if ell > k:
        raise ShapeMismatch("more rows than values; out of range for a square recording")
    t = widen(pad_rows(take_rows(v, 0, ell), k - ell), k)
    return flip_cols(recording_matrix(t)), None


# -- switching via evacuation -------------------------------------------------


@step("evacuate_lower_setup")
def _evacuate_lower_setup(v):
    b, a = v
    k = _common_bound(b, a)
    return widen(b, k), (widen(a, k), k)


@step("attach_relabelled_upper")
def _attach_relabelled_upper(v):
    b1, (a, k) = v
    return attach(b1, shift_values(a, k)), k


@step("split_and_evacuate_lower_part")
def _split_and_evacuate_lower_part(v):
    c1, k = v
    low, high = split_at_value(c1, k)
    return low, shift_values(high, -k)


@step("pair_with_context")
def _pair_with_context(v):
    return v[0], v[1]


# -- switching with canonical tableaux ----------------------------------------


@step("under_canonical")
def _under_canonical(v):
    mu = pt.trim(v.inner)
    return (canonical(mu), v), None


@step("witness_switch_setup")
def _witness_switch_setup(v):
    a1, b1 = v
    sigma = pt.trim(b1.inner)
    return (canonical(sigma), b1), a1


@step("rectified_with_witness")
def _rectified_with_witness(v):
    (_, c1), a1 = v
    return a1, c1


@step("keep_pair")
def _keep_pair(v):
    out, _ = v
    return out


# -- switching through the normal-shape case ----------------------------------


@step("absorb_lower_into_canonical")
def _absorb_lower_into_canonical(v):
    b, a = v
    k = _common_bound(b, a)
    mu = pt.trim(b.inner)
    x = attach(widen(canonical(mu), k), shift_values(widen(b, k), k))
    return (x, widen(a, k)), k


@step("split_absorbed_output")
def _split_absorbed_output(v):
    (a1, d1), k = v
    c1, high = split_at_value(d1, k)
    return (a1, c1), (shift_values(high, -k), k)


@step("inner_restored_pair")
def _inner_restored_pair(v):
    (_, a2), (b_out, _) = v
    return a2, b_out


# -- framing into the Littlewood-Richardson world ------------------------------


def _tail_sums(weight):
    k = len(weight)
    return tuple(sum(weight[i + 1:]) for i in range(k))


@step("frame_pair_dominant")
def _frame_pair_dominant(v):
    b, a = v
    k = _common_bound(b, a)
    bk, ak = widen(pad_rows(b, k - b.nrows), k), widen(pad_rows(a, k - a.nrows), k)
    alpha = _tail_sums(ak.weight())
    beta = _tail_sums(bk.weight())
    lam1 = ak.outer[0] if ak.outer else 0
    can_a = widen(pad_rows(canonical(alpha), k - len(pt.trim(alpha))), k)
    can_b = widen(pad_rows(canonical(beta), k - len(pt.trim(beta))), k)
    a_hat = compose(ak, can_a, a=lam1, b=0)
    a_hat = prepend_rows(a_hat, tuple(lam1 + alpha[0] + x for x in beta))
    b_hat = compose(bk, can_b, a=lam1 + alpha[0], b=k, gap=lam1)
    return (b_hat, a_hat), k


@step("unframe_pair")
def _unframe_pair(v):
    (a_hat, b_hat), k = v
    a_out = take_rows(a_hat, 2 * k, a_hat.nrows)
    b_out = take_rows(b_hat, 2 * k, b_hat.nrows)
    return a_out, b_out


# -- switching from the first symmetry map -------------------------------------


@step("lower_with_upper_context")
def _lower_with_upper_context(v):
    b, a = v
    return b, a


@step("embed_for_symmetry")
def _embed_for_symmetry(v):
    c, a = v
    k = _common_bound(c, a)
    ck, ak = widen(pad_rows(c, k - c.nrows), k), widen(pad_rows(a, k - a.nrows), k)
    wa = ak.weight_partition()
    s = wa[0] if wa else 0
    lam1 = ak.outer[0] if ak.outer else 0
    g = widen(pad_rows(canonical((s,) * k if s else ()), k - (k if s else 0)), k)
    c_hat = compose(ck, g, a=lam1, b=0)
    a_framed = prepend_rows(shift_values(ak, k), (lam1 + s,) * k)
    return attach(c_hat, a_framed), (k, s, lam1)


@step("split_off_upper_output")
def _split_off_upper_output(v):
    e, (k, s, lam1) = v
    f, high = split_at_value(e, k)
    b_out = take_rows(shift_values(high, -k), k, high.nrows)
    return f, (b_out, k)


@step("split_off_lower_output")
def _split_off_lower_output(v):
    h, (b_out, k) = v
    _, high = split_at_value(h, k)
    a_out = take_rows(shift_values(high, -k), k, high.nrows)
    return a_out, b_out


# -- second symmetry map <-> evacuation ----------------------------------------


@step("reindex_recording")
def _reindex_recording(v):
    lam = pt.trim(v.outer)
    return gamma_map(v), lam


@step("companion_inverse")
def _companion_inverse(v):
    x, lam = v
    return tau_inverse(x, lam)


@step("staircase_context_preimage")
def _staircase_context_preimage(v):
    k = v.k
    a = pt.pad(v.weight(), k)
    nu = tuple(sum(a[: k - i]) for i in range(1, k + 1))
    lam = pt.vector_add(nu, pt.reverse_vector(a))
    return gamma_inverse(v, lam), None


@step("companion_forward")
def _companion_forward(v):
    c, _ = v
    return tau_map(c)


# -- reversal through evacuation ------------------------------------------------


@step("graft_evacuated_canonical")
def _graft_evacuated_canonical(v):
    mu = pt.trim(v.inner)
    k = _common_bound(v)
    low = widen(evacuation_of_canonical(mu), k)
    b = attach(low, shift_values(widen(v, k), k))
    return b, (low, k)


@step("canonical_base_setup")
def _canonical_base_setup(v):
    mu = pt.trim(v.inner)
    return canonical(mu), v


@step("graft_given_evacuation")
def _graft_given_evacuation(v):
    low0, a = v
    k = _common_bound(a, low0)
    low = widen(low0, k)
    b = attach(low, shift_values(widen(a, k), k))
    return b, (low, k)


@step("split_reverse_lower")
def _split_reverse_lower(v):
    b0, (low, k) = v
    a0, c1 = split_at_value(b0, k)
    return a0, (c1, low, k)


@step("reattach_upper")
def _reattach_upper(v):
    a00, (c1, low, k) = v
    return attach(a00, c1), (low, k)


@step("strip_canonical_part")
def _strip_canonical_part(v):
    bv, (low, k) = v
    first, high = split_at_value(bv, k)
    if first != low:
        raise ShapeMismatch("reversal frame did not restore the canonical block")
    return shift_values(high, -k)


# -- octahedral steps ------------------------------------------------------------


@step("drop_inner_canonical")
def _drop_inner_canonical(v):
    a, b = v
    lam = pt.trim(a.inner)
    return (canonical(lam), a), b


@step("middle_switch_input")
def _middle_switch_input(v):
    (_, c1), b = v
    return (c1, b), None


@step("final_canonical_switch")
def _final_canonical_switch(v):
    b1, c2 = v[0]
    piv = pt.trim(b1.outer)
    return (canonical(piv), c2), b1


@step("octahedral_outputs")
def _octahedral_outputs(v):
    (_, d), b1 = v
    return b1, d


# -- matrix flips for the insertion variants --------------------------------------


@step("flip_both_ways")
def _flip_both_ways(v):
    from .matrices import check_matrix

    v = check_matrix(v)
    return flip_rows(v), flip_cols(v)


@step("insertion_and_recording")
def _insertion_and_recording(v):
    (b1, _), (_, a2) = v
    return b1, a2


@step("square_filling_matrix")
def _square_filling_matrix(v):
    sh = v.shape
    k = len(sh)
    if sh != (k,) * max(k, 1) and sh != ():
        raise NotSquare("square-shape filling required")
    return tuple(tuple(row) for row in v.values), None


@step("square_filling_flips")
def _square_filling_flips(v):
    mat, _ = _square_filling_matrix(v)
    return flip_rows(mat), flip_cols(mat)


@step("grafted_patterns")
def _grafted_patterns(v):
    out, _ = v
    return pattern_graft(*out)


@step("graft_two_results")
def _graft_two_results(v):
    (b1, _), (_, a2) = v
    return pattern_graft(b1, a2)


# ---------------------------------------------------------------------------
# evaluation


def evaluate(circuit, base: Callable, value):
    """Run the circuit, counting base calls; returns (result, CostReport)."""
    in_bits = bit_size(value)
    calls = 0

    def run(node, v):
        nonlocal calls
        if isinstance(node, LinearStep):
            return run_step(node.name, v)
        if isinstance(node, BaseCall):
            calls += 1
            return base(v)
        if isinstance(node, Trivial):
            x, ctx = run_step(node.pre, v)
            calls += 1
            return run_step(node.post, (base(x), ctx))
        if isinstance(node, Sequential):
            return run(node.second, run(node.first, v))
        if isinstance(node, Parallel):
            l, r = run_step(node.pre, v)
            return run_step(node.post, (run(node.left, l), run(node.right, r)))
        if isinstance(node, OnFirst):
            x, ctx = v
            return run(node.sub, x), ctx
        raise TypeError(f"not a circuit node: {node!r}")

    out = run(circuit, value)
    return out, CostReport(calls, in_bits, bit_size(out))


# ---------------------------------------------------------------------------
# reductions and their registry


@dataclass(frozen=True)
class Reduction:
    name: str
    source: str
    base: str
    circuit: Circuit
    declared_cost: int
    domain: str


def _pair(fn):
    return lambda v: fn(*v)


REFERENCES: dict = {
    "xi": xi,
    "xi_normal": xi_normal,
    "zeta": _pair(zeta),
    "zeta_normal": _pair(zeta_normal),
    "zeta_lr": _pair(zeta_lr),
    "psi": psi,
    "rsk": rsk,
    "phi_lr": phi_lr,
    "chi": chi,
    "rho1": rho1,
    "rho2": rho2,
    "octahedral": _pair(octahedral),
    "burge": burge,
    "hillman_grassl": hillman_grassl,
    "hillman_grassl_square": hillman_grassl,
}


def reference_map(name: str) -> Callable:
    try:
        return REFERENCES[name]
    except KeyError:
        raise MapMismatch(f"unknown map {name!r}") from None


def _build_registry():
    entries = [
        Reduction(
            "rsk_via_psi",
            "rsk",
            "psi",
            Parallel("staircase_pair", BaseCall(), BaseCall(), "pair_of_results"),
            2,
            "matrices",
        ),
        Reduction(
            "psi_via_phi_lr",
            "psi",
            "phi_lr",
            Trivial("as_base_input", "first_component"),
            1,
            "skew",
        ),
        Reduction(
            "phi_lr_via_zeta_normal",
            "phi_lr",
            "zeta_normal",
            seq(
                Trivial("under_canonical", "keep_pair"),
                Trivial("witness_switch_setup", "rectified_with_witness"),
            ),
            2,
            "skew",
        ),
        Reduction(
            "zeta_via_xi",
            "zeta",
            "xi",
            seq(
                Trivial("evacuate_lower_setup", "pair_with_context"),
                Trivial("attach_relabelled_upper", "pair_with_context"),
                Trivial("split_and_evacuate_lower_part", "pair_with_context"),
            ),
            3,
            "pairs",
        ),
        Reduction(
            "zeta_normal_via_xi_normal",
            "zeta_normal",
            "xi_normal",
            seq(
                Trivial("evacuate_lower_setup", "pair_with_context"),
                Trivial("attach_relabelled_upper", "pair_with_context"),
                Trivial("split_and_evacuate_lower_part", "pair_with_context"),
            ),
            3,
            "normal_pairs",
        ),
        Reduction(
            "xi_normal_via_rsk",
            "xi_normal",
            "rsk",
            Trivial("column_flipped_recording", "first_component"),
            1,
            "normal",
        ),
        Reduction(
            "rho1_via_zeta_normal",
            "rho1",
            "zeta_normal",
            Trivial("under_canonical", "second_component"),
            1,
            "lr",
        ),
        Reduction(
            "zeta_normal_via_zeta",
            "zeta_normal",
            "zeta",
            Trivial("as_base_input", "result_only"),
            1,
            "normal_pairs",
        ),
        Reduction(
            "zeta_via_zeta_lr",
            "zeta",
            "zeta_lr",
            Trivial("frame_pair_dominant", "unframe_pair"),
            1,
            "pairs",
        ),
        Reduction(
            "zeta_lr_via_rho1",
            "zeta_lr",
            "rho1",
            seq(
                Trivial("lower_with_upper_context", "pair_with_context"),
                Trivial("embed_for_symmetry", "pair_with_context"),
                Trivial("split_off_upper_output", "split_off_lower_output"),
            ),
            3,
            "lr_pairs",
        ),
        Reduction(
            "zeta_via_zeta_normal",
            "zeta",
            "zeta_normal",
            seq(
                Trivial("absorb_lower_into_canonical", "pair_with_context"),
                Trivial("split_absorbed_output", "inner_restored_pair"),
            ),
            2,
            "pairs",
        ),
        Reduction(
            "rho2_via_xi_normal",
            "rho2",
            "xi_normal",
            Trivial("reindex_recording", "companion_inverse"),
            1,
            "lr",
        ),
        Reduction(
            "xi_normal_via_rho2",
            "xi_normal",
            "rho2",
            Trivial("staircase_context_preimage", "companion_forward"),
            1,
            "normal",
        ),
        Reduction(
            "xi_normal_via_chi",
            "xi_normal",
            "chi",
            Trivial("as_base_input", "result_only"),
            1,
            "normal",
        ),
        Reduction(
            "chi_via_xi_normal",
            "chi",
            "xi_normal",
            seq(
                Trivial("graft_evacuated_canonical", "split_reverse_lower"),
                Trivial("identity", "reattach_upper"),
                Trivial("identity", "strip_canonical_part"),
            ),
            3,
            "skew",
        ),
        Reduction(
            "chi_via_xi_normal_plain",
            "chi",
            "xi_normal",
            seq(
                Trivial("canonical_base_setup", "graft_given_evacuation"),
                Trivial("identity", "split_reverse_lower"),
                Trivial("identity", "reattach_upper"),
                Trivial("identity", "strip_canonical_part"),
            ),
            4,
            "skew",
        ),
        Reduction(
            "octahedral_via_zeta",
            "octahedral",
            "zeta",
            seq(
                Trivial("drop_inner_canonical", "middle_switch_input"),
                Trivial("identity", "final_canonical_switch"),
                Trivial("identity", "octahedral_outputs"),
            ),
            3,
            "lr_pairs",
        ),
        Reduction(
            "rsk_via_burge",
            "rsk",
            "burge",
            Parallel("flip_both_ways", BaseCall(), BaseCall(), "insertion_and_recording"),
            2,
            "matrices",
        ),
        Reduction(
            "burge_via_rsk",
            "burge",
            "rsk",
            Parallel("flip_both_ways", BaseCall(), BaseCall(), "insertion_and_recording"),
            2,
            "matrices",
        ),
        Reduction(
            "hillman_grassl_square_via_burge",
            "hillman_grassl_square",
            "burge",
            Trivial("square_filling_matrix", "grafted_patterns"),
            1,
            "square_fillings",
        ),
        Reduction(
            "hillman_grassl_square_via_rsk",
            "hillman_grassl_square",
            "rsk",
            Parallel("square_filling_flips", BaseCall(), BaseCall(), "graft_two_results"),
            2,
            "square_fillings",
        ),
    ]
    return {r.name: r for r in entries}


_REGISTRY = None


def registry() -> dict:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return _REGISTRY


def verify_reduction(red: Reduction, instance) -> bool:
    """Evaluate the circuit against the reference implementations; the
    dynamic call count must also match the declared cost."""
    got, report = evaluate(red.circuit, reference_map(red.base), instance)
    want = reference_map(red.source)(instance)
    return got == want and report.base_calls == red.declared_cost


def compose_reductions(r1: Reduction, r2: Reduction) -> Reduction:
    """Substitute r2's circuit for every base call of r1."""
    if r1.base != r2.source:
        raise MapMismatch(f"{r1.name} needs base {r1.base!r}, got {r2.source!r}")

    def subst(node):
        if isinstance(node, LinearStep):
            return node
        if isinstance(node, BaseCall):
            return r2.circuit
        if isinstance(node, Trivial):
            return seq(LinearStep(node.pre), OnFirst(r2.circuit), LinearStep(node.post))
        if isinstance(node, Sequential):
            return Sequential(subst(node.first), subst(node.second))
        if isinstance(node, Parallel):
            return Parallel(node.pre, subst(node.left), subst(node.right), node.post)
        if isinstance(node, OnFirst):
            return OnFirst(subst(node.sub))
        raise TypeError(f"not a circuit node: {node!r}")

    circuit = subst(r1.circuit)
    return Reduction(
        f"{r1.source}_via_{r2.base}_composed",
        r1.source,
        r2.base,
        circuit,
        r1.declared_cost * r2.declared_cost,
        r1.domain,
    )


# ---------------------------------------------------------------------------
# the reduction graph

THEOREM_MAPS = ("rsk", "psi", "phi_lr", "zeta", "xi_normal", "chi", "rho1", "rho2")


def reduction_edges():
    """Cheapest registered edge source -> base per map pair."""
    best = {}
    for red in registry().values():
        key = (red.source, red.base)
        if key not in best or red.declared_cost < best[key].declared_cost:
            best[key] = red
    return best


def min_cost_path(source: str, target: str):
    """Dijkstra over multiplicative costs; returns (cost, [Reduction...])."""
    edges = reduction_edges()
    known = {source} | {b for _, b in edges} | {s for s, _ in edges}
    if source not in known or target not in known:
        raise Unreachable(f"no path from {source} to {target}")
    import heapq

    dist = {source: (1, [])}
    heap = [(1, source)]
    while heap:
        d, node = heapq.heappop(heap)
        if node == target:
            return dist[node]
        if d > dist.get(node, (None,))[0]:
            continue
        for (s, b), red in edges.items():
            if s != node:
                continue
            nd = d * red.declared_cost
            if b not in dist or nd < dist[b][0]:
                dist[b] = (nd, dist[node][1] + [red])
                heapq.heappush(heap, (nd, b))
    raise Unreachable(f"no path from {source} to {target}")


def min_cost(source: str, target: str) -> int:
    return min_cost_path(source, target)[0]


def max_pairwise_cost():
    """Worst min-cost over ordered pairs of the equivalence-class maps."""
    worst = 0
    argmax = None
    for s in THEOREM_MAPS:
        for t in THEOREM_MAPS:
            if s == t:
                continue
            c = min_cost(s, t)
            if c > worst:
                worst, argmax = c, (s, t)
    return worst, argmax


def composed_reduction(source: str, target: str) -> Reduction:
    """Min-cost chain from source to target, composed into one reduction."""
    c, path = min_cost_path(source, target)
    if not path:
        raise Unreachable(f"{source} and {target} are the same map")
    red = path[0]
    for nxt in path[1:]:
        red = compose_reductions(red, nxt)
    return red


def graph_dot() -> str:
    lines = ["digraph reductions {"]
    for red in registry().values():
        lines.append(f'  "{red.source}" -> "{red.base}" [label="{red.declared_cost}"];')
    lines.append("}")
    return "\n".join(lines)
