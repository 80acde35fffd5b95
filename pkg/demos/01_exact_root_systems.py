"""Exact root-system data: positive roots, Cartan matrices, marks.

Everything in this demo is integer or rational arithmetic; floating point
never enters the combinatorics.
"""

from cartan_gamma import (RootSystemLabel, affine_cartan_matrix, build_root_system,
                          coroot_pairing, height)

for text in ("A3", "B4", "G2", "F4", "E8"):
    rs = build_root_system(RootSystemLabel.parse(text))
    print(f"{rs.label}: rank {rs.rank}, {len(rs.positive_roots)} positive roots, "
          f"h = {rs.h}, dual h = {rs.h_dual}")
    print(f"   marks   = {list(rs.marks)}")
    print(f"   comarks = {list(rs.comarks)}")
    print(f"   highest root = {list(rs.highest_root)} "
          f"(height {height(rs, rs.highest_root)})")

print()
print("The root count always equals rank * h / 2, the marks sum to h,")
print("and the comarks sum to the dual Coxeter number.")
print()

g2 = build_root_system(RootSystemLabel.parse("G2"))
print("G2 positive roots with their coroot pairings against node 1:")
for alpha in g2.positive_roots:
    print(f"   {alpha}  height {sum(alpha)}  pairing {coroot_pairing(g2, alpha, 1):+d}")

print()
print("Affine Cartan matrix of G2 (marks vector spans its kernel):")
affine = affine_cartan_matrix(g2)
for row in affine:
    print("  ", list(row))
print("   affine * marks =",
      [sum(a * m for a, m in zip(row, g2.marks)) for row in affine])
