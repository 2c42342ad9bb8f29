from __future__ import annotations

import importlib
import random

import pytest

from spherelink import _kernels_py as pure
from spherelink import kernels

compiled = pytest.importorskip("spherelink._kernels")


def test_compiled_core_selected_by_default():
    assert kernels.COMPILED


def test_env_var_forces_pure(monkeypatch):
    monkeypatch.setenv("SPHERELINK_PURE", "1")
    mod = importlib.reload(kernels)
    try:
        assert not mod.COMPILED and mod.refine is pure.refine
    finally:
        monkeypatch.delenv("SPHERELINK_PURE")
        importlib.reload(kernels)


def test_face_classes_agree():
    rng = random.Random(1)
    for _ in range(300):
        nf = rng.randint(1, 30)
        m = rng.randint(0, 60)
        f1 = [rng.randrange(nf) for _ in range(m)]
        f2 = [rng.randrange(nf) for _ in range(m)]
        cut = [rng.random() < 0.3 for _ in range(m)]
        assert pure.face_classes(nf, f1, f2, cut) == compiled.face_classes(nf, f1, f2, cut)


def test_refine_agrees():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 12)
        nb = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.4:
                    nb[u] |= 1 << v
                    nb[v] |= 1 << u
        cells = [list(range(n))]
        assert pure.refine(cells, nb) == compiled.refine(cells, nb)


def test_map_code_agrees(named):
    from spherelink.embedding import map_code, spherical_arrangements

    for name in ["K4", "K5-e", "K42", "D3"]:
        for a in spherical_arrangements(named(name), False):
            for part in a.parts:
                kernels.min_map_code = pure.min_map_code
                try:
                    slow = map_code(a.rotation, part)
                finally:
                    importlib.reload(kernels)
                assert slow == map_code(a.rotation, part)
