from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

qc = QuantumCircuit(2)
qc.h(0)
qc.cx(0, 1)
tc = transpile(qc, backend, optimization_level=3)
if verbose:
    print(tc)
