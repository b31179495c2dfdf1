from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

def bell():
    qc = QuantumCircuit(4, 2)  # expect: oversized-circuit
    qc.h(0)
    qc.cx(0, 1)
    qc.measure([0, 1], [0, 1])
    return qc
