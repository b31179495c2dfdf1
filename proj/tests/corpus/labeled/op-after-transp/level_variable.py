from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

level = 3
qc = QuantumCircuit(2, 2)
qc.h(0)
tc = transpile(qc, backend, optimization_level=level)
tc.measure(0, 0)  # expect: op-after-transp
