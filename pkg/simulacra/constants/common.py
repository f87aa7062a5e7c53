import os
import re

THIS_DIR = os.path.dirname(os.path.realpath(__file__))
RESOURCES_DIR = os.path.join(THIS_DIR, '..', '..', 'resources')
LNLN_WITNESS_FIXTURE = os.path.join(RESOURCES_DIR, 'lnln_witnesses.txt')
H3C_WITNESS_FIXTURE = os.path.join(RESOURCES_DIR, 'h3c_witnesses.yaml')

# Environment configuration
NO_CACHE = bool(os.environ.get('SIMULACRA_NO_CACHE'))
JOBS_ENV = 'SIMULACRA_JOBS'
LOG_LEVEL = os.environ.get('SIMULACRA_LOG_LEVEL', 'INFO').upper()

# Factor kinds, listed in the fixed kind order used for sorting cones
KIND_LORENTZ = 'Lorentz'
KIND_REAL_PSD = 'RealPSD'
KIND_COMPLEX_PSD = 'ComplexPSD'
KIND_QUATERNION_PSD = 'QuaternionPSD'
KIND_OCTONION_PSD = 'OctonionPSD'
KIND_ORDER = (KIND_LORENTZ, KIND_REAL_PSD, KIND_COMPLEX_PSD, KIND_QUATERNION_PSD, KIND_OCTONION_PSD)

# Real dimension of the field each matrix family is built over
FIELD_DIMENSION = {
    KIND_REAL_PSD: 1,
    KIND_COMPLEX_PSD: 2,
    KIND_QUATERNION_PSD: 4,
    KIND_OCTONION_PSD: 8,
}
FIELD_LETTER = {
    KIND_REAL_PSD: 'R',
    KIND_COMPLEX_PSD: 'C',
    KIND_QUATERNION_PSD: 'H',
    KIND_OCTONION_PSD: 'O',
}
LETTER_FIELD = {v: k for k, v in FIELD_LETTER.items()}

# Smallest canonical matrix size; the octonion family has a single member
MATRIX_CANONICAL_MIN = 3
OCTONION_SIZE = 3
OCTONION_DIM = 27
OCTONION_RANK = 79

# Cone expressions, e.g. "2*L3 + H3(C) + R8"
EXPRESSION_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<letter>[LRHCO])|(?P<punct>[()+*]))')
EXPRESSION_SEPARATOR = ' + '
EMPTY_CONE_EXPRESSION = 'R0'

# L^n + L^n witness lines, e.g. "8: 1,5,10"
PATTERN_LNLN_WITNESS_LINE = re.compile(r'^\s*(\d+)\s*:\s*(\d+(?:\s*,\s*\d+)*)\s*$')

# Third condition of the subproblem reduction
CONDITION3_MIN_N = 15

# Smallest n for which the closed-form witness for L^n + L^n is proven
LNLN_FORMULA_MIN_N = 100

# n for which L^n + L^n has no symmetric simulacra
LNLN_NO_SIMULACRA = frozenset({0, 1, 2, 3, 5, 6, 7, 11, 12, 13, 18})

# n for which H3(C) + L^n has symmetric simulacra
H3C_LN_SIMULACRA = frozenset(list(range(2, 11)) + [15, 18, 21, 22, 30])

# Beyond this n the complex-3 rows are settled by the second condition
H3C_LN_SEARCH_MAX_N = 30

# Admissible dim(K) for each n checked by brute force in the relaxed reduction;
# n = 4 falls outside the reduction and is listed separately
SUBPROBLEM_REGION = {
    3: (1, 2),
    5: (1, 2, 3),
    6: (1, 2, 3, 4),
    7: (1, 2, 3, 4),
    8: (1, 2, 3, 4, 5),
    9: (1, 2, 3, 4, 5),
    10: (1, 2, 3, 4, 5, 6),
    11: (1, 2, 3, 4, 5, 6),
    12: (1, 2, 3, 4, 5, 6),
    13: (1, 2, 3, 4, 5, 6, 7),
    14: (1, 2, 3, 4, 5, 6, 7),
}
SUBPROBLEM_EXCLUDED_N = 4
SUBPROBLEM_EXCLUDED_DIMS = (1, 2, 3)

# Claim identifiers, in the order `verify all` runs them
CLAIM_TABLE1 = 'table1'
CLAIM_TABLE2 = 'table2'
CLAIM_H2_CONSISTENCY = 'h2-consistency'
CLAIM_LORENTZ_NO_SIMULACRA = 'lorentz-no-simulacra'
CLAIM_REAL_PSD = 'real-psd'
CLAIM_COMPLEX_PSD = 'complex-psd'
CLAIM_COMPLEX_PSD_3_NONE = 'complex-psd-3-none'
CLAIM_QUATERNION_PSD = 'quaternion-psd'
CLAIM_OCTONION_PSD = 'octonion-psd'
CLAIM_DOUBLE_COMPLEX = 'double-complex'
CLAIM_TWO_FAMILIES = 'two-families'
CLAIM_THM4_REGION = 'thm4-region'
CLAIM_TABLE3 = 'table3'
CLAIM_LMLN = 'lmln'
CLAIM_LNLN_EXHAUSTIVE = 'lnln-exhaustive'
CLAIM_LNLN_APPENDIX_B = 'lnln-appendixB'
CLAIM_LNLN_FORMULA = 'lnln-formula'
CLAIM_BOUNDARY_COUNTEREXAMPLES = 'boundary-counterexamples'
CLAIM_ALL = 'all'
CLAIMS = (
    CLAIM_TABLE1,
    CLAIM_TABLE2,
    CLAIM_H2_CONSISTENCY,
    CLAIM_LORENTZ_NO_SIMULACRA,
    CLAIM_REAL_PSD,
    CLAIM_COMPLEX_PSD,
    CLAIM_COMPLEX_PSD_3_NONE,
    CLAIM_QUATERNION_PSD,
    CLAIM_OCTONION_PSD,
    CLAIM_DOUBLE_COMPLEX,
    CLAIM_TWO_FAMILIES,
    CLAIM_THM4_REGION,
    CLAIM_TABLE3,
    CLAIM_LMLN,
    CLAIM_LNLN_EXHAUSTIVE,
    CLAIM_LNLN_APPENDIX_B,
    CLAIM_LNLN_FORMULA,
    CLAIM_BOUNDARY_COUNTEREXAMPLES,
)

# Scales at which claims are checked
TABLE_MIN_N = 2
TABLE_MAX_N = 50
CONSTRUCTION_MAX_N = 100
LORENTZ_SEARCH_MAX_N = 15
LMLN_MAX_M = 8
LMLN_N_SPAN = 10
LNLN_EXHAUSTIVE_MAX_N = 30
LNLN_FIXTURE_MAX_N = 100
LNLN_FORMULA_MAX_N = 300
BOUNDARY_MIN_M = 5
BOUNDARY_MAX_M = 30
TWO_FAMILIES_MAX_DIM = 16

TABLE_1 = '1'
TABLE_2 = '2'
TABLE_3 = '3'
TABLE_B = 'B'
TABLES = (TABLE_1, TABLE_2, TABLE_3, TABLE_B)
FORMAT_CSV = 'csv'
FORMAT_JSON = 'json'
FORMATS = (FORMAT_CSV, FORMAT_JSON)
TABLE_B_SEARCH_LIMIT = 40

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

VERDICT_PASS = 'pass'
VERDICT_FAIL = 'fail'
