from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

a = QuantumRegister(2)
b = QuantumRegister(2)
qc = QuantumCircuit(a, b)  # expect: oversized-circuit
qc.h(a[0])
qc.cx(a[0], a[1])
