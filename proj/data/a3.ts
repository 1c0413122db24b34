# path used for the propagation example
initial s0
s0 a s1
s1 b s2
s2 c s3
