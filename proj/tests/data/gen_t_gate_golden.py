# Copyright 2026 The fermitomo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates t_gate_m1.json: exact tomography distributions for the T gate
on one mode, computed with plain numpy matrices."""

import json
import math
import pathlib

import numpy as np

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]])
Z = np.diag([1.0, -1.0]).astype(complex)


def kron_all(ops):
    out = np.eye(1, dtype=complex)
    for op in ops:
        out = np.kron(out, op)
    return out


def majorana(j, modes):
    # Mode 1 is the most significant tensor factor; strings run over later modes.
    i = (j - 1) // 2
    ops = [I2] * modes
    ops[i] = X if j % 2 == 1 else Y
    for k in range(i + 1, modes):
        ops[k] = Z
    return kron_all(ops)


def exchange(i, j, modes):
    d = 2**modes
    return (np.eye(d) + majorana(i, modes) @ majorana(j, modes)) / math.sqrt(2)


def circuit(gates, modes):
    u = np.eye(2**modes, dtype=complex)
    for i, j in gates:
        u = exchange(i, j, modes) @ u
    return u


def main():
    modes = 2
    c = [None] + [majorana(j, modes) for j in range(1, 2 * modes + 1)]
    pair = [1j * c[2 * p + 1] @ c[2 * p + 2] for p in range(modes)]
    rho0 = np.zeros((4, 4), dtype=complex)
    rho0[3, 3] = 1.0
    t = math.cos(math.pi / 8) * np.eye(4) + math.sin(math.pi / 8) * c[1] @ c[2]
    preps = [[], [(2, 3)], [(2, 4)], [(2, 3), (2, 3)]]
    meas = [[], [(3, 2)], [(4, 2)]]
    projectors = []
    for eta in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        proj = np.eye(4, dtype=complex)
        for p, s in enumerate(eta):
            proj = proj @ (np.eye(4) + s * pair[p]) / 2
        projectors.append(proj)
    settings, probs = [], []
    for g, prep in enumerate(preps):
        gu = circuit(prep, modes)
        rho = t @ gu @ rho0 @ gu.conj().T @ t.conj().T
        for u, m in enumerate(meas):
            uu = circuit(m, modes)
            out = uu @ rho @ uu.conj().T
            settings.append([g, u])
            probs.append([float(np.real(np.trace(pr @ out))) for pr in projectors])
    doc = {"m": 1, "map": "T", "settings": settings, "probabilities": probs}
    path = pathlib.Path(__file__).with_name("t_gate_m1.json")
    path.write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
