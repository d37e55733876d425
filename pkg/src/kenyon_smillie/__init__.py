"""(2,3,4) Teichmüller 曲线族的具体数据与验证。"""

from src.kenyon_smillie.cusps import (
    CuspData,
    StableDifferential,
    cusp_data,
    irreducible_cusp,
    reducible_cusp,
    verify_cusp_nodes,
    verify_cusp_relation,
)
from src.kenyon_smillie.family import (
    DegreeEntry,
    degree_table,
    expected_degree,
    family,
    fiber_at_infinity,
    reconstruct_family,
    symbolic_family,
    t_samples,
    verify_descent,
    verify_divisor_conditions,
    verify_symmetry,
    verify_torsion,
)
from src.kenyon_smillie.orbifold import SuperellipticMonomial, verify_orbifold_relation
from src.kenyon_smillie.real_points import sample_real_points, to_csv
from src.kenyon_smillie.reports import CheckReport, SuiteReport
from src.kenyon_smillie.suite import SuiteContext, known_anchors, run_suite

__all__ = [
    "CheckReport",
    "CuspData",
    "DegreeEntry",
    "StableDifferential",
    "SuiteContext",
    "SuiteReport",
    "SuperellipticMonomial",
    "cusp_data",
    "degree_table",
    "expected_degree",
    "family",
    "fiber_at_infinity",
    "irreducible_cusp",
    "known_anchors",
    "reconstruct_family",
    "reducible_cusp",
    "run_suite",
    "sample_real_points",
    "symbolic_family",
    "t_samples",
    "to_csv",
    "verify_cusp_nodes",
    "verify_cusp_relation",
    "verify_descent",
    "verify_divisor_conditions",
    "verify_orbifold_relation",
    "verify_symmetry",
    "verify_torsion",
]
