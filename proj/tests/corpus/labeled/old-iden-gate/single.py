from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

qc = QuantumCircuit(1)
qc.iden(0)  # expect: old-iden-gate
