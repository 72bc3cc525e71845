import numpy as np

GRID = np.linspace(0.05, 0.95, 20)
R_SYM = (3 - np.sqrt(5)) / 2
GRID_CONFIGS = [(a, b) for a in GRID for b in GRID] + [(R_SYM, R_SYM)]
