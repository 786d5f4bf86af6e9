"""Scratch: verify frozen catalog verdicts against fast paths and oracles."""
import time

from affinoid.catalog import entries
from affinoid.fields import DifferentialForm, MultiVectorField
from affinoid.forms import is_affine_form, is_multiplicative_form, parallelogram_isotropy
from affinoid.multivector import (
    affine_mv_oracle,
    is_affine_mv,
    is_multiplicative_mv,
    multiplicative_mv_oracle,
)
from affinoid.tensors import is_affine_tensor, is_multiplicative_tensor

counts = {"mv": [0, 0, 0, 0], "form": [0, 0, 0, 0], "tensor": [0, 0, 0, 0]}
bad = 0
t0 = time.time()
for entry in entries():
    G = entry.groupoid
    for fx in entry.fixtures:
        k = fx.kind
        if k == "mv":
            aff = is_affine_mv(G, fx.field)
            mult = is_multiplicative_mv(G, fx.field)
            o_aff = bool(affine_mv_oracle(G, fx.field))
            o_mult = bool(multiplicative_mv_oracle(G, fx.field))
        elif k == "form":
            aff = is_affine_form(G, fx.field)
            mult = is_multiplicative_form(G, fx.field)
            o_aff = parallelogram_isotropy(G, fx.field)
            o_mult = mult
        else:
            aff = is_affine_tensor(G, fx.field)
            mult = is_multiplicative_tensor(G, fx.field)
            o_aff, o_mult = aff, mult
        counts[k][0] += aff
        counts[k][1] += not aff
        counts[k][2] += mult
        counts[k][3] += not mult
        tag = f"{entry.id}:{fx.name}"
        if aff != o_aff or mult != o_mult:
            print(f"ORACLE-DISAGREE {tag}: fast=({aff},{mult}) oracle=({o_aff},{o_mult})")
            bad += 1
        if (aff, mult) != (fx.affine, fx.multiplicative):
            print(f"FROZEN-WRONG    {tag}: computed=({aff},{mult}) frozen=({fx.affine},{fx.multiplicative})")
            bad += 1
print(f"\ncounts [aff, !aff, mult, !mult]: {counts}")
print(f"elapsed {time.time() - t0:.1f}s, problems: {bad}")
