from .common.errors import SourceSpan, AffineLogicError, UnknownSymbol, ArityMismatch, ALSyntaxError, SchemaError, \
    DimensionMismatch, NotSubstitutable, UnboundVariable, IllDefinedQuotient, InvalidStructure, SizeMismatch, \
    ProductTooLarge, UnknownAxiom, UnknownAxiomName, MalformedBindings, DanglingPremiseId, RejectedScript, \
    StepRejected, KernelSoundnessError, OpenCondition, Infeasible, FamilyMiss, BudgetExceeded, ConfigError
from .common.rationals import parse_rational, format_rational
from .syntax import *
from .parser import *
from .semantics import *
from .ultramean import *
from .proof import *
from .analysis import *
__version__ = '0.1.0'
