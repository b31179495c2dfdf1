from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

qr = QuantumRegister(1)
creg = ClassicalRegister(1)
qc = QuantumCircuit(qr, creg)
qc.h(0).c_if(creg, 0)  # expect: cond-wo-meas
qc.measure(0, 0)
