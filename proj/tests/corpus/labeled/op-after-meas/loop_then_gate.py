from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

qc = QuantumCircuit(2, 2)
for i in range(2):
    qc.h(i)
    qc.measure(i, i)
qc.h(1)  # expect: op-after-meas
