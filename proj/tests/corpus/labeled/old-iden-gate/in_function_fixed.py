from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

def idle(n):
    qc = QuantumCircuit(1)
    qc.x(0)
    qc.id(0)
    return qc
