from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

qc = QuantumCircuit(3, 3)
for i in range(3):
    qc.h(i)
    qc.measure(i, i)
qc.measure(1, 0)  # expect: double-meas
