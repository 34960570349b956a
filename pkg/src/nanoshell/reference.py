"""Published reference values used by the verification suite.

Tables are indexed ``[eta][nr][l]`` and printed to five decimals.
"""

ETAS = (50, 100, 150, 200)

EXACT_XI = {
    50: ((0.19429, 0.18832, 0.18078), (0.17771, 0.16730, 0.15675), (0.15594, 0.14673, 0.13783), (0.13782, 0.12942, 0.12197)),
    100: ((0.13917, 0.13682, 0.13385), (0.13252, 0.12810, 0.12322), (0.12230, 0.11701, 0.11206), (0.11184, 0.10708, 0.10227)),
    150: ((0.11418, 0.11283, 0.11113), (0.11034, 0.10776, 0.10486), (0.10421, 0.10076, 0.09733), (0.09702, 0.09371, 0.09048)),
    200: ((0.09913, 0.09823, 0.09708), (0.09655, 0.09480, 0.09282), (0.09235, 0.08992, 0.08740), (0.08709, 0.08452, 0.08207)),
}

WKB_XI = {
    50: ((0.19497, 0.18824, 0.17992), (0.17693, 0.16694, 0.15696), (0.15621, 0.14665, 0.13759), (0.13772, 0.12953, 0.12186)),
    100: ((0.13960, 0.13705, 0.13379), (0.13224, 0.12772, 0.12296), (0.12221, 0.11713, 0.11214), (0.11184, 0.10696, 0.10228)),
    150: ((0.11447, 0.11305, 0.11121), (0.11025, 0.10753, 0.10461), (0.10403, 0.10073, 0.09741), (0.09711, 0.09371, 0.09040)),
    200: ((0.09935, 0.09841, 0.09719), (0.09653, 0.09467, 0.09264), (0.09219, 0.08983, 0.08740), (0.08713, 0.08458, 0.08206)),
}

# gap between (l=0, nr=0) and (l=1, nr=0) in Ry, with the relative tolerance
# that matches how precisely each value is quoted
EXCITATION_RY = {50: (22.8e-4, 0.02), 100: (6.5e-4, 0.02), 150: (3.1e-4, 0.02), 200: (1.8e-4, 0.03)}

# ground-state <r^2> in Bohr radii squared
R2_GROUND = {50: 1292.3, 100: 4527.9, 150: 9573.2, 200: 16373.5}


def states(lmax: int = 2, nrmax: int = 3):
    """``(eta, l, nr)`` triples covering the tables."""
    return [(eta, l, nr) for eta in ETAS for l in range(lmax + 1) for nr in range(nrmax + 1)]
