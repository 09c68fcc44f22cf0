"""Smoke test for the `adr` extension module.

Build with `cargo build -p adr-py --features extension-module` and copy
target/debug/libadr.so next to this file as adr.so.
"""

import adr

a = adr.Algebra.builtin("ex54")
print(a)
assert a.vertex_count == 6

m = a.module("P(1)")
print(m, m.loewy_length, m.radical_layers())

summands, is_approx, minimal = a.approximation(a.module("quot(P(1), rad^2(P(1)))"))
print("approximation", summands, is_approx, minimal)
assert is_approx and minimal

kx2 = adr.Algebra.builtin("kx2")
print("kx2 labels", kx2.labels(), "dim R", kx2.adr_dim())
for s in kx2.labels():
    d = kx2.standard(*s)
    assert d.is_delta_good()

pair, dll_ok, checks_ok = adr.counterexample(4)
print("A(4) pair", pair, "dll_ok", dll_ok, "checks", checks_ok)
assert pair == (5, 5) and not dll_ok and checks_ok

try:
    adr.Algebra("not an algebra")
except ValueError as e:
    print("input error:", e)
else:
    raise AssertionError("expected ValueError")

print("ok")
