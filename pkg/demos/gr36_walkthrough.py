"""Gr(3,6) with the class of {2,4,6} three times: from the coefficient to the reduction."""
from schubred import lr
from schubred.branch import branch_class
from schubred.reduce import sl_weights, theta_stretch_check, verify_main_theo
from schubred.rootsys import ParabolicData, root_system
from schubred.schubert import intersection_number
from schubred.weyl import subset_to_weyl

P = ParabolicData.of(root_system("A", 5), [3])
vs = [subset_to_weyl((2, 4, 6), P)] * 3

print("c =", intersection_number(vs, P), "(tableaux:", lr.lr_coefficient((2, 1), (2, 1), (3, 2, 1)), ")")
rep = branch_class(vs, P)
print("branch class:", [str(w) for w in rep.weights()])
print("theta:", [str(t) for t in rep.theta], "flags:", rep.flags)

print("\nk  m(k theta)  Levi blocks")
for row in theta_stretch_check(vs, P, 5):
    print(f"{row['k']}  {row['m']:>10}  {row['m_I']} x {row['m_Ibar']}")

# a face point: every GL_6 weight is squared
z = sl_weights([(3, 3, 1, 1, 0, 0), (2, 2, 1, 1, 0, 0), (-1, -1, -2, -2, -4, -4)])
chk = verify_main_theo(z, vs, P)
print("\nm(zeta) + m(zeta - theta) = %d + %d, m_L = %d" % (chk.m_zeta, chk.m_shifted, chk.m_levi))
