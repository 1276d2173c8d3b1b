"""Closed-form bounds for π(G∘H), certificates, and the small-instance sweep
that looks for counterexamples to the conjectured lower bound."""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .colouring import Colouring, exact_pi, multipartite_exact_pi, verify_nonrepetitive
from .errors import BadParameter, TooLarge
from .graphio import to_graph6
from .graphs import Graph, MultipartiteSpec, independence_number, lex_product, make_family, small_graphs

# default solver guard on the number of vertices of a product
MAX_PRODUCT_ORDER = 12
MAX_CHECK_ORDER = 9

NAMED_POOL = (
    "K1", "K2", "E2", "K3", "E3", "P3", "K4", "E4", "P4", "C4", "S3", "K1,1,2",
    "K5", "E5", "P5", "C5", "S4", "K2,3", "K6", "P6", "C6", "K3,3", "P7", "C7", "P8", "P9",
)


def default_pool() -> tuple[str, ...]:
    """Named families plus every graph on at most four vertices."""
    extra = [f"g6:{to_graph6(g)}" for n in range(1, 5) for g in small_graphs(n)]
    return NAMED_POOL + tuple(extra)


CSV_COLUMNS = ("g6_G", "g6_H", "piG", "piH", "lower", "upper", "exact", "holds")


def _positive(**values: int) -> None:
    for name, v in values.items():
        if not isinstance(v, int) or v < 1:
            raise BadParameter(f"{name} must be a positive integer, got {v!r}")


def upper_bound_product(piH: int, nG: int, alphaG: int, nH: int) -> int:
    """π(H) + (|V(G)| - α(G))·|V(H)|, an upper bound on π(G∘H)."""
    _positive(piH=piH, nG=nG, alphaG=alphaG, nH=nH)
    if alphaG > nG:
        raise BadParameter("alphaG cannot exceed nG")
    if piH > nH:
        raise BadParameter("piH cannot exceed nH")
    return piH + (nG - alphaG) * nH


def lower_bound_conjecture(piH: int, piG: int, nH: int) -> int:
    """π(H) + (π(G) - 1)·|V(H)|, the conjectured lower bound on π(G∘H)."""
    _positive(piH=piH, piG=piG, nH=nH)
    return piH + (piG - 1) * nH


def multipartite_product_pi(spec: MultipartiteSpec | Sequence[int], piH: int, nH: int) -> int:
    """Exact π(G∘H) for complete multipartite G, where both bounds meet."""
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(tuple(spec))
    _positive(piH=piH, nH=nH)
    return lower_bound_conjecture(piH, multipartite_exact_pi(spec), nH)


def recognise_multipartite(g: Graph) -> Optional[MultipartiteSpec]:
    """Part sizes if ``g`` is complete multipartite, else ``None``.

    G is complete multipartite exactly when every component of its
    complement is a clique.
    """
    if g.n == 0:
        return None
    comp = g.complement()
    sizes = []
    for part in comp.components():
        if not all(comp.has_edge(u, v) for i, u in enumerate(part) for v in part[i + 1:]):
            return None
        sizes.append(len(part))
    return MultipartiteSpec(tuple(sizes))


@dataclass(frozen=True)
class TheoremCheck:
    pi_exact: int
    upper_n_minus_alpha_plus_1: int
    is_multipartite: bool
    equality_expected: bool
    equality_observed: bool


def theorem_pi_check(g: Graph) -> TheoremCheck:
    """Compare π(G) with n - α(G) + 1; equality is required for complete
    multipartite graphs."""
    if g.n > MAX_CHECK_ORDER:
        raise TooLarge(f"theorem check limited to {MAX_CHECK_ORDER} vertices, got {g.n}")
    pi, _ = exact_pi(g)
    alpha, _ = independence_number(g)
    upper = g.n - alpha + 1
    multi = recognise_multipartite(g) is not None
    if pi > upper:
        raise AssertionError(f"π(G)={pi} exceeds n-α+1={upper}")
    if multi and pi != upper:
        raise AssertionError(f"complete multipartite graph with π(G)={pi} != n-α+1={upper}")
    return TheoremCheck(pi, upper, multi, multi, pi == upper)


@dataclass
class BoundsCertificate:
    g: str
    h: str
    g6_G: str
    g6_H: str
    nG: int
    nH: int
    alphaG: int
    piG: int
    piH: int
    lower_conjectured: int
    upper_bound: int
    exact: Optional[int] = None
    witness: Optional[list[int]] = None
    closed_form: Optional[int] = None
    closed_form_source: Optional[str] = None

    @property
    def holds(self) -> Optional[bool]:
        """Whether the conjectured lower bound holds; ``None`` without ``exact``."""
        return None if self.exact is None else self.exact >= self.lower_conjectured

    def to_dict(self) -> dict:
        d = asdict(self)
        d["holds"] = self.holds
        return d

    def csv_row(self) -> dict:
        return {
            "g6_G": self.g6_G, "g6_H": self.g6_H, "piG": self.piG, "piH": self.piH,
            "lower": self.lower_conjectured, "upper": self.upper_bound,
            "exact": "" if self.exact is None else self.exact,
            "holds": "" if self.holds is None else str(self.holds).lower(),
        }


def certify(g: Graph, h: Graph, g_name: Optional[str] = None, h_name: Optional[str] = None,
            exact: bool = False, force: bool = False) -> BoundsCertificate:
    """Assemble bounds for G∘H from exact π of the factors.

    With ``exact`` the product is solved too, subject to the order guard
    unless ``force`` is set.
    """
    if exact and g.n * h.n > MAX_PRODUCT_ORDER and not force:
        raise TooLarge(f"product order {g.n * h.n} exceeds the solver guard {MAX_PRODUCT_ORDER}")
    for name, f in (("G", g), ("H", h)):
        if f.n > MAX_PRODUCT_ORDER and not force:
            raise TooLarge(f"factor {name} has {f.n} vertices, above the solver guard {MAX_PRODUCT_ORDER}")
    g6g, g6h = to_graph6(g), to_graph6(h)
    piG, _ = exact_pi(g)
    piH, _ = exact_pi(h)
    alphaG, _ = independence_number(g)
    cert = BoundsCertificate(
        g=g_name or f"g6:{g6g}", h=h_name or f"g6:{g6h}", g6_G=g6g, g6_H=g6h,
        nG=g.n, nH=h.n, alphaG=alphaG, piG=piG, piH=piH,
        lower_conjectured=lower_bound_conjecture(piH, piG, h.n),
        upper_bound=upper_bound_product(piH, g.n, alphaG, h.n),
    )
    spec = recognise_multipartite(g)
    if spec is not None:
        cert.closed_form = multipartite_product_pi(spec, piH, h.n)
        cert.closed_form_source = "complete multipartite G: upper and lower bounds coincide"
    if exact:
        product = lex_product(g, h)
        value, witness = exact_pi(product, upper_hint=cert.upper_bound)
        cert.exact = value
        cert.witness = list(witness.colours)
    return cert


# --- sweep ------------------------------------------------------------------

@dataclass
class SweepReport:
    max_order: int
    certificates: list[BoundsCertificate] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[BoundsCertificate]:
        return [c for c in self.certificates if c.holds is False]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for c in self.certificates:
            writer.writerow(c.csv_row())
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "max_order": self.max_order,
            "instances": len(self.certificates),
            "counterexamples": len(self.counterexamples),
            "certificates": [c.to_dict() for c in self.certificates],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SweepReport":
        data = json.loads(text)
        certs = []
        for d in data["certificates"]:
            d = dict(d)
            d.pop("holds", None)
            certs.append(BoundsCertificate(**d))
        return cls(data["max_order"], certs)


def default_workers() -> int:
    cap = os.environ.get("THUELAB_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            pass
    return n


def _sweep_job(job: tuple[str, str]) -> BoundsCertificate:
    g_name, h_name = job
    g, h = make_family(g_name), make_family(h_name)
    cert = certify(g, h, g_name, h_name, exact=True, force=True)
    if cert.exact > cert.upper_bound:
        raise AssertionError(f"π({g_name}∘{h_name})={cert.exact} exceeds the proven upper bound {cert.upper_bound}")
    witness = Colouring(tuple(cert.witness))
    assert verify_nonrepetitive(lex_product(g, h), witness) is None
    return cert


def sweep_jobs(max_order: int, g_pool: Iterable[str], h_pool: Iterable[str]) -> list[tuple[str, str]]:
    """Descriptor pairs with product order at most ``max_order``, one per
    distinct ``(graph6(G), graph6(H))`` key, in key order."""
    seen: dict[tuple[str, str], tuple[str, str]] = {}
    graphs = {d: make_family(d) for d in {*g_pool, *h_pool}}
    for gd in g_pool:
        for hd in h_pool:
            g, h = graphs[gd], graphs[hd]
            if g.n * h.n > max_order:
                continue
            seen.setdefault((to_graph6(g), to_graph6(h)), (gd, hd))
    return [seen[k] for k in sorted(seen)]


def sweep_conjecture(max_order: int, g_pool: Optional[Iterable[str]] = None,
                     h_pool: Optional[Iterable[str]] = None, *, force: bool = False,
                     workers: Optional[int] = None,
                     done: Optional[Mapping[tuple[str, str], BoundsCertificate]] = None) -> SweepReport:
    """Solve every pair in the pools with ``|V(G)|·|V(H)| <= max_order``.

    Instances already present in ``done`` (keyed by graph6 pair) are reused,
    which makes an interrupted sweep resumable. The report order depends only
    on the keys, not on scheduling.
    """
    if max_order < 1:
        raise BadParameter("max_order must be positive")
    if max_order > MAX_PRODUCT_ORDER and not force:
        raise TooLarge(f"sweep order {max_order} exceeds the guard {MAX_PRODUCT_ORDER}")
    g_pool = list(default_pool() if g_pool is None else g_pool)
    h_pool = list(default_pool() if h_pool is None else h_pool)
    jobs = sweep_jobs(max_order, g_pool, h_pool)
    done = dict(done or {})
    keyed = {}
    todo = []
    for gd, hd in jobs:
        key = (to_graph6(make_family(gd)), to_graph6(make_family(hd)))
        if key in done:
            keyed[key] = done[key]
        else:
            todo.append((key, (gd, hd)))
    workers = workers or default_workers()
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_job, [job for _, job in todo]))
    else:
        results = [_sweep_job(job) for _, job in todo]
    for (key, _), cert in zip(todo, results):
        keyed[key] = cert
    return SweepReport(max_order, [keyed[k] for k in sorted(keyed)])
