from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

n = 5
qc = QuantumCircuit(n, n - 2)  # expect: insuff-clas-reg
for i in range(n):
    qc.h(i)
