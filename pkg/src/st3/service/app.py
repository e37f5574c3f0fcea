"""FastAPI service over the catalog.

The catalog is built once per process and served from memory; exact
rationals are rendered as "num/den" strings alongside float
approximations.  Run with `st3 serve` or mount `create_app()` under any
ASGI server.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException, Query

from ..catalog import STGroup, build_catalog
from ..identify import match_empirical
from ..lpoly import EmpiricalProfile, LPolyFormatError, parse_line
from ..rationality import (
    beukers_smyth_check,
    cyclic_integrality_classes,
    single_integrality_classes,
)
from ..sample import UnsupportedSampler, sample
from ..stats import densities, diagonal, simplex
from ..catalog import verify_counts
from . import schemas as S


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _summary(g: STGroup) -> S.GroupSummary:
    return S.GroupSummary(
        label=g.label, name=g.name, absolute_type=g.letter,
        identity_component=g.conn.name, components=g.n_components,
        realizable=g.realizable, maximal=g.maximal,
    )


def create_app(extended: bool = False) -> FastAPI:
    app = FastAPI(title="st3: Sato-Tate groups of abelian threefolds",
                  description="Exact catalog, statistics and heuristic matching")
    state: dict = {}

    def catalog(ext: bool | None = None) -> list[STGroup]:
        use = extended if ext is None else ext
        key = "ext" if use else "std"
        if key not in state:
            state[key] = build_catalog(extended=use)
        return state[key]

    def get_group(label: str) -> STGroup:
        for g in catalog(True):
            if g.label == label or g.name == label:
                return g
        raise HTTPException(status_code=404, detail=f"no group {label!r}")

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/groups", response_model=list[S.GroupSummary])
    def groups(extended: bool = Query(default=False),
               type: str | None = Query(default=None, max_length=1)):
        out = [g for g in catalog(extended)
               if type is None or g.letter == type.upper()]
        return [_summary(g) for g in out]

    @app.get("/groups/{label}", response_model=S.GroupDetail)
    def group_detail(label: str):
        g = get_group(label)
        fp = g.comps.fingerprint()
        return S.GroupDetail(
            **_summary(g).model_dump(), provenance=g.provenance,
            subgroups=list(g.subgroups),
            fingerprint=S.FingerprintModel(
                order=fp.order, element_orders=list(fp.element_orders),
                class_sizes=list(fp.class_sizes),
                abelian_invariants=list(fp.abelian_invariants),
                center_order=fp.center_order, derived_order=fp.derived_order,
            ),
        )

    @app.get("/groups/{label}/moments", response_model=S.MomentsResponse)
    def group_moments(label: str, simplex_m: int = Query(default=6, ge=0, le=14,
                                                         alias="simplex")):
        g = get_group(label)
        vals = simplex(g, simplex_m)
        return S.MomentsResponse(
            label=g.label, simplex=simplex_m,
            moments=[S.MomentEntry(e1=e[0], e2=e[1], e3=e[2],
                                   value=_frac(v), approx=float(v))
                     for e, v in sorted(vals.items())],
        )

    @app.get("/groups/{label}/diagonal", response_model=S.DiagonalResponse)
    def group_diagonal(label: str, m: int = Query(default=3, ge=0, le=3)):
        g = get_group(label)
        vals = diagonal(g, m)
        return S.DiagonalResponse(
            label=g.label, m=m,
            norms=[S.DiagonalEntry(l1=l[0], l2=l[1], l3=l[2],
                                   value=_frac(v), approx=float(v))
                   for l, v in vals.items()],
        )

    @app.get("/groups/{label}/densities", response_model=S.DensitiesResponse)
    def group_densities(label: str):
        g = get_group(label)
        rows = densities(g)
        return S.DensitiesResponse(
            label=g.label,
            rows=[[_frac(x) for x in row] for row in rows],
            approx=[[float(x) for x in row] for row in rows],
        )

    @app.get("/verify/tables", response_model=S.VerifyResponse)
    def verify_tables():
        checks = [S.CheckModel(name=c.name, expected=str(c.expected),
                               got=str(c.got), ok=c.ok) for c in verify_counts()]
        return S.VerifyResponse(ok=all(c.ok for c in checks), checks=checks)

    @app.get("/roots", response_model=S.RootsResponse)
    def roots(mode: str = Query(default="single",
                                pattern="^(single|cyclic|verify)$")):
        if mode == "single":
            trs = [str(t) for t in single_integrality_classes()]
            return S.RootsResponse(mode=mode, triples=trs)
        if mode == "cyclic":
            trs = [str(t) for t in cyclic_integrality_classes()]
            return S.RootsResponse(mode=mode, triples=trs)
        rep = beukers_smyth_check()
        return S.RootsResponse(mode=mode, triples=[str(t) for t in rep["recovered"]],
                               ok=rep["ok"])

    @app.post("/match", response_model=S.MatchResponse)
    def match(req: S.MatchRequest):
        prof = EmpiricalProfile()
        try:
            for i, line in enumerate(req.records, start=1):
                rec = parse_line(line, i)
                if rec is not None:
                    prof.add(rec)
        except LPolyFormatError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        if prof.count == 0:
            raise HTTPException(status_code=422, detail="no valid records")
        if req.variant not in ("a", "b", "c"):
            raise HTTPException(status_code=422, detail="variant must be a, b or c")
        cat = catalog(False)
        by_label = {g.label: g for g in cat}
        res = match_empirical(prof, req.tol, req.variant, cat)
        return S.MatchResponse(
            variant=req.variant, tol=req.tol,
            candidates=[S.MatchCandidate(label=lb, name=by_label[lb].name,
                                         max_deviation=dv) for lb, dv in res],
        )

    @app.post("/sample", response_model=S.SampleResponse)
    def sample_group(req: S.SampleRequest):
        g = get_group(req.group)
        try:
            triples = list(sample(g, req.n, req.seed))
        except UnsupportedSampler as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return S.SampleResponse(group=g.label, seed=req.seed, triples=triples)

    return app
