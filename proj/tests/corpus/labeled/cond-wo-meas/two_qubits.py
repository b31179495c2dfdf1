from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

qr = QuantumRegister(2)
cr = ClassicalRegister(2)
qc = QuantumCircuit(qr, cr)
qc.h(qr[0])
qc.x(qr[1]).c_if(cr, 1)  # expect: cond-wo-meas
qc.measure(qr, cr)
