initial s
s e t
