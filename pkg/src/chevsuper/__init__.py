"""Exact Chevalley bases and supergroup elements for the classical
families sl(m|n) and osp(M|2n)."""

from .errors import (DegenerateWeights, DivisionByZero, FormulaMismatch,
                     GeneratorMismatch, IntegralityViolation, InvalidFamily,
                     NotAChevalleyBasis, NotARoot, NotHomogeneous,
                     NotInvertible, NotRational, ParityError, WrongConstructor)
from .scalars import QQ, PrimeField, integer_binomial, parse_field
from .grassmann import GrassmannAlgebra, SuperScalar
from .rootdata import FamilyType, Root, RootSystem, build_root_system, form
from .liesuper import (ChevalleyBasis, SuperMatrix, StructureConstantTable,
                       admissible_lattice_check, build_chevalley_basis,
                       divided_power, jacobi_check, kostant_monomial_action,
                       stabilizer_cartan, structure_constants, super_bracket,
                       supertrace)

__version__ = "0.1.0"
