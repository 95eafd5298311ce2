# budgets
CLOCK_BOUND = 'w^4'
STEPS_PER_BLOCK = 10 ** 6
MAX_ACCEL_LEVEL = 3
BLOCKS_PER_LEVEL = 64

# acceleration soundness audit
SOUNDNESS_CYCLES = 10

# stdlib
WO_FIELD_BOUND = 8
ECK_TIME = 40
ECK_FIELD_BOUND = 4
JUMP_INPUT_BOUND = 8
GAP_UNIVERSE = 4

# registered generators
GEN_PATH_ENV = 'ITTM_GEN_PATH'
