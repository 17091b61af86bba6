"""Values transcribed from the published tables and formulas, used as regression targets."""

# lambda2 numerator coefficients: ALPHA[r] = coefficients of mu^0..mu^5 in alpha_r
ALPHA = {
    1: [-1, -1, -1, -1, -1, -1],
    2: [1, 3, 4, 5, 6, 7],
    3: [0, -2, -6, -10, -15, -21],
    4: [0, 0, 3, 10, 20, 35],
    5: [0, 0, 0, -4, -15, -35],
    6: [0, 0, 0, 0, 5, 21],
    7: [0, 0, 0, 0, 0, -6],
}

ETA = {
    1: [2, 6, 14, 30, 62, 126],
    2: [-3, -15, -45, -115, -273, -623],
    3: [1, 12, 55, 180, 511, 1344],
    4: [0, -3, -30, -145, -525, -1652],
    5: [0, 0, 6, 60, 315, 1260],
    6: [0, 0, 0, -10, -105, -602],
    7: [0, 0, 0, 0, 15, 168],
    8: [0, 0, 0, 0, 0, -21],
}

# <N^m> = sum_r B_r^(m) x^-r for m = 1..7, as listed in the text
MOMENT_ROWS = {
    1: [1],
    2: [1, 2],
    3: [1, 6, 6],
    4: [1, 14, 36, 24],
    5: [1, 30, 150, 240, 120],
    6: [1, 62, 540, 1560, 1800, 720],
    7: [1, 126, 1806, 8400, 16800, 15120, 5040],
}

# Printed moment table, columns m = 8..14, rows r = 1..m.
PRINTED_TABLE = {
    8: [1, 254, 5796, 40824, 126000, 191520, 141120, 40320],
    9: [1, 510, 18150, 186480, 834120, 1905120, 2328480, 1451520, 362880],
    10: [1, 1022, 55980, 818520, 5103000, 16435440, 29635200, 30240000, 16329600, 3628800],
    11: [1, 2046, 171006, 3498000, 29607600, 129230640, 322494480, 479001600, 419126400,
         199584000, 39916800],
    12: [1, 40946, 519156, 14676024, 165528000, 953029440, 3162075840, 6411968640,
         8083152000, 6187104000, 2634508800, 479001600],
    13: [1, 8190, 1569750, 60780720, 901020120, 6711344640, 28805736960, 76592355840,
         130456085760, 142702560000, 97037740800, 37362124800, 6227020800],
    14: [1, 16382, 4733820, 249401880, 4809004200, 45674188560, 248619571200,
         843184742400, 1863435974400, 2731586457600, 2637143308800, 1612798387200,
         566658892800, 87178291200],
}

# Entry printed as 40946; the recurrence and B_2^(m) = 2^m - 2 give 4094.
TABLE_TYPO = (12, 2)
TABLE_TYPO_CORRECTED = 4094

# Numerators of the truncated asymptotes at order 5
LAMBDA2_AS5_NUM = [1, -4, 11, -26, 57, -120]
LAMBDA2_AS5_DEN = [1, -2, 3, -4, 5, -6]
LAMBDA3_AS5_NUM = [6 * c for c in (1, -6, 25, -90, 301, -966)]
LAMBDA3_AS5_DEN = [1, -3, 6, -10, 15, -21]

# Quoted large-momentum asymptotes at order 5 (four-digit rounding)
QUOTED = {
    ("lambda2", 0.1): 0.8331,
    ("lambda2", 0.15): 0.7664,
    ("lambda3", 0.1): 3.6365,
    ("lambda3", 0.15): 2.9964,
    ("r3", 0.1): 0.7472,
    ("r3", 0.15): 0.5194,
}
