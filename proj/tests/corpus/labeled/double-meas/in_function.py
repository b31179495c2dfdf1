from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

def build():
    qc = QuantumCircuit(3, 3)
    qc.h(0)
    qc.cx(0, 1)
    qc.cx(1, 2)
    qc.measure(2, 2)
    qc.measure(2, 0)  # expect: double-meas
    return qc
