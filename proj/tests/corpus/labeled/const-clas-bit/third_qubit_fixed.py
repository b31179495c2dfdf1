from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

qc = QuantumCircuit(3, 3)
qc.cx(0, 1)
qc.ry(0.4, 2)
qc.measure(2, 2)
