"""Regression values produced by scripts/derive_oracle_values.py (exact sympy oracle)."""

# n = 1, gammas [1/2, 2/5]
C1 = [(0.5+0j), (0.3+0j)]
A1 = [(0.5+0j), (0.4+0j)]
B1 = [(1+0j), (0.2+0j)]
R1 = [(0.4+0j)]

# n = 3, gammas [1/2, -1/3 + i/4, i/5, 2/7 - i/7]
GAMMAS3 = [(0.5+0j), (-0.3333333333333333+0.25j), 0.2j, (0.2857142857142857-0.14285714285714285j)]
C3 = [(0.5+0j), (-0.25+0.1875j), (-0.018229166666666668+0.18645833333333334j), (0.1975-0.03718315972222222j)]
A3 = [(0.5+0j), (-0.32261904761904764+0.1880952380952381j), (-0.041666666666666664+0.2j), (0.2857142857142857-0.14285714285714285j)]
B3 = [(1+0j), (-0.14523809523809525+0.0011904761904761906j), (-0.11904761904761904+0.08214285714285714j), (0.14285714285714285-0.07142857142857142j)]
R3 = [(0.2857142857142857-0.14285714285714285j), 0.17959183673469387j, (-0.27708454810495625+0.22064139941690963j)]
# k = n parameter: alpha ascending, beta ascending
ALPHA3 = [(4+0j), (1+0j), (-0.5+0j), 0.3333333333333333j]
BETA3 = [(-0.21216715257531585+0.32501457725947525j), (0.20272108843537415-0.07142857142857142j), (-0.047619047619047616-0.09523809523809523j)]
F3_TAYLOR = [(0.5+0j), (-0.25+0.1875j), (-0.018229166666666668+0.18645833333333334j), (0.1975-0.03718315972222222j), (0.03576829839840556+0.016829090375875405j), (0.04497701635200073-0.05863719703008617j)]
F3_DEGREE = 3
