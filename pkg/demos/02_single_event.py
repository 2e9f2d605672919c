"""One conditional teleportation event, end to end.

The input (|1> + i|3>)/sqrt(2) enters the second squeezer together with one
half of a squeezed-vacuum resource; photon counts (n, n') on the two output
ports herald a conditional state on the receiver's mode, which is finished
by a photon-number shift of d = n' - n.
"""

import numpy as np

from condteleport import (
    ImpossibleOutcomeError,
    MeasurementOutcome,
    SqueezeParams,
    make_state,
    teleport_event,
)

psi_in = make_state([0, 2 ** -0.5, 0, 1j * 2 ** -0.5], 60)
squeeze = SqueezeParams(1.5)


def show(n, nprime):
    try:
        res = teleport_event(psi_in, squeeze, squeeze, MeasurementOutcome(n, nprime))
    except ImpossibleOutcomeError:
        print(f"(n={n}, n'={nprime}): impossible outcome, P = 0")
        return
    support = np.nonzero(res.psi_tel.amplitudes)[0]
    amps = ", ".join(f"|{m}>: {res.psi_tel.amplitudes[m]:+.4f}" for m in support[:4])
    print(f"(n={n}, n'={nprime}): P = {res.probability:.3e}  F = {res.fidelity:.6f}   {amps}")


print("input: (|1> + i|3>)/sqrt(2), |alpha| = |beta| = 1.5")
print()

# shift-free diagonal events (no corrective shift needed)
for n in (0, 1, 7):
    show(n, n)
print()

# n = n' + 2 and n' + 3 leave only the |3> component: F is exactly 1/2
show(3, 1)
show(3, 0)
print()

# counts with n > n' + 3 cannot occur for this input
show(5, 1)
