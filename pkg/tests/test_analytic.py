import math

import numpy as np
from fastcore.test import test_close, test_eq, test_fail

from plijax.distributions.families import DistributionSpec, FamilyTag
from plijax.models.analytic import (
    ModelKind,
    ModelSpec,
    as_model_fn,
    builtin_input_specs,
    builtin_model,
    evaluate,
    flood,
    ishigami,
)
from plijax.utils.errors import DomainError, UnsupportedError


def test_flood_at_the_nominal_point():
    test_close(flood(1013.0, 30.0, 50.0, 55.0), 2.1421, eps=1e-4)
    test_fail(lambda: flood(1013.0, 30.0, 55.0, 55.0), exc=DomainError)
    test_fail(lambda: flood([1013.0, 1013.0], [30.0, -1.0], 50.0, 55.0), exc=DomainError, contains="[1]")


def test_ishigami():
    test_close(ishigami(math.pi / 2, math.pi / 2, 1.0), 8.1)
    test_close(ishigami(0.0, 0.0, 3.0), 0.0)
    test_close(ishigami(math.pi / 2, 0.0, 2.0, a=1.0, b=1.0), 17.0)


def test_builtin_models():
    model = builtin_model("flood")
    test_eq(model.kind, ModelKind.Flood)
    test_eq(model.input_names, ("Q", "Ks", "Zv", "Zm"))
    test_eq(model.d, 4)
    assert model.can_evaluate
    test_eq(builtin_input_specs("ishigami")[0], DistributionSpec(FamilyTag.Normal, (0.0, 1.0)))
    test_fail(lambda: builtin_input_specs("external"), exc=UnsupportedError)
    test_fail(lambda: ModelKind.parse("borehole"), exc=DomainError)


def test_model_spec_validation():
    normal = DistributionSpec(FamilyTag.Normal, (0.0, 1.0))
    test_fail(lambda: ModelSpec(ModelKind.Ishigami, (normal,) * 2), exc=DomainError)
    test_fail(lambda: ModelSpec(ModelKind.External, (normal,)), exc=DomainError)
    external = ModelSpec("external", (normal,) * 2, path="runs.csv")
    test_eq(external.input_names, ("x1", "x2"))
    assert not external.can_evaluate
    test_fail(lambda: as_model_fn(external), exc=UnsupportedError)


def test_evaluate():
    model = builtin_model("ishigami")
    X = np.array([[math.pi / 2, math.pi / 2, 1.0], [0.0, 0.0, 0.0]])
    test_close(evaluate(model, X), np.array([8.1, 0.0]))
    test_eq(evaluate(model, np.zeros((0, 3))).shape, (0,))
    test_fail(lambda: evaluate(lambda X: np.log(X[:, 0] - 1), X), exc=DomainError, contains="row 1")
    test_fail(lambda: evaluate(lambda X: X[:1, 0], X), exc=DomainError)
