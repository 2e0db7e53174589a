"""Interference against entanglement and discord for Werner states.

rho(p) = p |singlet><singlet| + (1 - p) I/4 is separable for p <= 1/3, yet
its two-particle interference p^2 is nonzero for every p > 0.  Discord is
also nonzero there; concurrence is not.  The three-qubit analogue mixes
GHZ with noise and is separable up to p = 1/5.
"""

from qinterference import sweep

# %% Two qubits.
res = sweep("werner", 11)
print("   p     I2      C       EoF     D")
for row in res.rows:
    print("  ".join(f"{x:.4f}" for x in row))

# %% Three qubits: I3 = p^2, all of it GHZ-like.
res3 = sweep("werner-ghz", 11)
print("\n   p     I3      I_GHZ   I_W     GD")
for row in res3.rows:
    print("  ".join(f"{x:.4f}" for x in row))
