from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

qc = QuantumCircuit(1, 1)
qc.x(0)
tc = transpile(qc, backend, optimization_level=3)
tc.h(0)  # expect: op-after-transp
