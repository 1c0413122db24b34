# two-state cycle
initial s0
s0 a s1
s1 a s0
