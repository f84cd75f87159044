"""
Constants used in the swatchlink package.

It includes the geometry of the Dehn filling, tolerances of the tile model,
default search budgets and the names of the tables reproduced by the CLI.

"""

# Tolerance used to compare tile coordinates and seam positions
SEAM_TOLERANCE = 1e-6

# Coordinates of tiles are rounded to this many decimals once composed
COORDINATE_DECIMALS = 9

# Boundary height of every strand end on a tile edge
BOUNDARY_HEIGHT = 0.5

# Dehn filling geometry. A tile point (x, y, z) is mapped to the annulus at
# angle 2*pi*x, radius RADIUS_OFFSET + y and height HEIGHT_OFFSET + z.
RADIUS_OFFSET = 1.0
HEIGHT_OFFSET = 1.0
RETURN_OUTER_RADIUS = 3.0
RETURN_FAR_RADIUS = 3.2
RETURN_INNER_RADIUS = 0.8
RETURN_DEPTH = -1.0
RETURN_ANGLE_OFFSET = 0.002
MERIDIAN_INNER_RADIUS = 0.3
MERIDIAN_OUTER_RADIUS = 4.0
MERIDIAN_TOP_ANGLE = 0.0041
MERIDIAN_BOTTOM_ANGLE = 0.0023
MERIDIAN_HEIGHT = 5.0
LONGITUDE_RADIUS = 2.5
LONGITUDE_SAMPLES = 128
FILL_MAX_STEP = 0.004

# Projection of space curves
PROJECTION_EPSILON = 1e-9
PROJECTION_TILTS = ((0.0, 0.0), (0.013, 0.007), (0.029, -0.017), (-0.041, 0.023))

# Knitting moves need a clear height gap between the two layers of a finger
MIN_LAYER_GAP = 0.1

# Default search budget of the simplifier
DEFAULT_BUDGET_CROSSINGS = 4
DEFAULT_BUDGET_NODES = 100_000
DEFAULT_BUDGET_DEPTH = 64

# Brute force state sums are only used up to this many crossings
STATE_SUM_LIMIT = 12

# DT codes are realised by searching crossing signs, bounded by this size
DT_IMPORT_LIMIT = 16

# Default seed of the fuzzing checks
DEFAULT_SEED = 0

# Names of the tables reproduced by `swatchlink table`
TABLE_NAMES = ("2", "3", "4")

# Invariants known to the report layer
INVARIANT_NAMES = ("mva", "jones", "det", "linking", "h1", "brunnian")

# Export formats known to the code layer
EXPORT_FORMATS = ("pd", "dt", "gauss", "tangle-json")

# Annulus sums leave this gap between the two tiles for the connecting strands
COMPOSITION_GAP = 0.02

# Height of the strip that holds the crossings added by a twist band, and the
# heights of the strands passing in front of and behind the fabric there
TWIST_BAND = 0.15
FRONT_HEIGHT = 0.95
BACK_HEIGHT = 0.05

# Knitting: a new row squeezes the rows below it into this share of the annulus
ROW_SQUEEZE = 0.25
DEFAULT_BAND_WIDTH = 0.04
