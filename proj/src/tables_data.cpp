#include "a4cb/tables.hpp"

namespace a4cb {

const char* const kTable1 = R"FIX(# table1: move sequence of reduced words from (1,3,2,4,1,3,2,4,1,3) to (2,4,1,3,2,4,1,3,2,4)
1 3 2 4 1 3 2 4 1 3
3 1 2 4 1 3 2 4 1 3
3 1 2 1 4 3 2 4 1 3
3 2 1 2 4 3 2 4 1 3
3 2 1 4 2 3 2 4 1 3
3 2 1 4 3 2 3 4 1 3
3 2 1 4 3 2 3 4 3 1
3 2 1 4 3 2 4 3 4 1
3 2 1 4 3 4 2 3 4 1
3 2 1 3 4 3 2 3 4 1
3 2 3 1 4 3 2 3 4 1
2 3 2 1 4 3 2 3 4 1
2 3 2 1 4 2 3 2 4 1
2 3 2 1 2 4 3 2 4 1
2 3 1 2 1 4 3 2 4 1
2 3 1 2 4 1 3 2 4 1
2 3 1 2 4 3 1 2 4 1
2 3 1 2 4 3 1 2 1 4
2 3 1 2 4 3 2 1 2 4
2 3 1 4 2 3 2 1 2 4
2 3 1 4 3 2 3 1 2 4
2 1 3 4 3 2 3 1 2 4
2 1 4 3 4 2 3 1 2 4
2 4 1 3 4 2 3 1 2 4
2 4 1 3 2 4 3 1 2 4
2 4 1 3 2 4 1 3 2 4
)FIX";

const char* const kTable3 = R"FIX(# table3: irredundant inequality systems of the 144 regions of linearity (A4)
# format: <region> | <forms <= 0> || <forms >= 0>; forms over letters A,B,C,D,E,H, digit = coefficient
1 | A,BC,CD,E,BH || BCD
2 | A,BC,E,BH || B,CD
3 | ABC,CD,E,BH || A,BCD
4 | A,BC,E,BCDH || BCD,BH
5 | A,CD,E,BH || BC,D
6 | A,BC,CD,BEH || BCD,E
7 | A,BC,BEH || B,CD,E
8 | ABC,E,BH || A,B,CD
9 | ABC,E,BCDH || A,BCD,BH
10 | A,E,BCDH || BC,D,BH
11 | A,CD,BEH || BC,D,E
12 | A,B,C,BEH || CD,BE
13 | B,ABC,E,H || AB,CD
14 | ABC,BCD,E,H || ABCD,BH
15 | A,D,E,BCH || BC,BH
16 | A,C,D,BEH || BC,DE
17 | A,B,BEH || C,D,BE
18 | AB,C,BEH || A,CD,BE
19 | ABC,BE,H || AB,CD,E
20 | B,ABC,E || AB,CD,H
21 | ABC,BCD,E || B,ABCD,H
22 | BCD,E,H || ABC,D,BH
23 | D,E,BCH || A,BC,BH
24 | A,DE,BCH || BC,E,BH
25 | A,C,BDEH || BC,DE,BEH
26 | A,D,BEH || B,C,DE
27 | A,B,D,BEH || C,BDE
28 | AB,C,BE,H || CD,ABE
29 | B,ABC,CD,E || ABCD,H
30 | BC,D,E,H || ABC,BH
31 | A,C,DE,BH || BC,BEH
32 | A,BDEH || B,C,DE,BEH
33 | AB,BEH || A,C,D,BE
34 | ABC,BE || AB,CD,E,H
35 | BCD,E || B,ABC,D,H
36 | DE,BCH || A,BC,E,BH
37 | C,DE,BH || A,BC,BEH
38 | A,DE,BH || B,C,BEH
39 | A,B,BDEH || C,BDE,BEH
40 | AB,D,BEH || A,C,BDE
41 | AB,BE,H || C,D,ABE
42 | AB,C,BE || CD,ABE,H
43 | ABC,CD,BE || ABCD,E,H
44 | B,CD,E || ABC,D,H
45 | BC,D,E || B,ABC,H
46 | BC,DE,H || ABC,E,BH
47 | DE,BH || A,B,C,BEH
48 | AB,BDEH || A,C,BDE,BEH
49 | AB,BE || C,D,ABE,H
50 | CD,BE || ABC,D,E,H
51 | BC,DE || B,ABC,E,H
52 | B,DE,H || AB,C,BEH
53 | AB,BDE,H || C,ABDE,BEH
54 | AB,D,BE || C,ABDE,H
55 | C,D,BE || ABC,DE,H
56 | B,C,DE || ABC,BE,H
57 | B,DE || AB,C,BE,H
58 | BDE,H || AB,C,DE,BEH
59 | AB,BDE || C,BE,ABDE,H
60 | D,BE || AB,C,DE,H
61 | C,BDE || ABC,BE,DE,H
62 | BDE || AB,C,BE,DE,H
63 | B,AB,C,BE,ABE,H || CD
64 | ABC,CD,BCD,E,H,BH || ABCD
65 | BC,ABC,BCD,ABCD,E,H || BH
66 | A,C,D,DE,BH,BEH || BC
67 | A,C,BC,CD,BCD,BEH || BCDE
68 | BC,ABC,BCDE,ABCDE,H || E,BH
69 | B,C,ABC,BCDE,ABCDE || BE,H
70 | BC,ABC,BCD,ABCD,E || B,H
71 | B,AB,C,BE,ABE || CD,H
72 | B,AB,BDE,ABDE,H || C,BEH
73 | B,AB,BE,ABE,H || C,D
74 | A,D,DE,BH,BEH || B,C
75 | C,D,DE,BH,BEH || A,BC
76 | B,D,DE,H,BEH || AB,C
77 | C,BC,DE,H,BH || ABC,BEH
78 | CD,BCD,E,H,BH || ABC,D
79 | B,AB,D,BE,ABDE || C,H
80 | B,C,D,BE,DE || ABC,H
81 | C,ABC,CD,ABCD,BE || ABCDE,H
82 | C,D,BCDE,H,BEH || ABC,DE
83 | AB,D,BDE,H,BEH || C,ABDE
84 | A,C,BC,BCDEH,B2CDEH || BCDE,BEH
85 | C,ABC,CD,ABCD,BEH || A,BCDE
86 | C,ABC,BCDE,H,AB2CDEH || ABCDE,BEH
87 | ABC,CD,BCDE,H,BEH || ABCD,E
88 | BC,ABC,BCDE,ABCDE || B,E,H
89 | D,DE,BH,BEH || A,B,C
90 | B,AB,BDE,ABDE || C,BE,H
91 | B,AB,BE,ABE || C,D,H
92 | B,D,DE,BE || AB,C,H
93 | C,ABC,BCDE,AB2CDE || BE,ABCDE,H
94 | C,BCDE,H,BDEH || ABC,DE,BEH
95 | D,BDE,H,BEH || AB,C,DE
96 | CD,BCDE,H,BEH || ABC,D,E
97 | C,ABC,BCDEH,AB2CDEH || A,BCDE,BEH
98 | A,D,E || B,BC,BH,BCH
99 | B,E,H || AB,ABC,D,CD
100 | CD,E,BH || A,ABC,D,BCD
101 | A,E,BH || B,BC,D,CD
102 | A,BC,E || B,BCD,BH,BCDH
103 | ABC,CD,BEH || A,ABCD,E,BCDE
104 | ABC,BCDE,H || E,ABCDE,BEH,AB2CDEH
105 | A,BC,BCDEH || E,BCDE,BEH,B2CDEH
106 | C,D,BEH || A,ABC,DE,BCDE
107 | A,B,C || BE,BCDE,BEH,BCDEH
108 | B,E || AB,ABC,D,CD,H
109 | A,E || B,BC,D,BH,BCDH
110 | D,E || A,B,BC,BH,BCH
111 | A,DE || B,BC,E,BH,BCH
112 | E,BCDH || A,ABC,D,BCD,BH
113 | E,BH || A,B,ABC,D,CD
114 | ABC,E || A,B,BCD,BH,BCDH
115 | ABC,BEH || A,AB,CD,E,BE
116 | ABC,BCDEH || A,E,BCDE,BEH,AB2CDEH
117 | BE,H || AB,ABC,D,CD,E
118 | A,BEH || B,BC,D,CD,E
119 | CD,BEH || A,ABC,D,E,BCDE
120 | D,BEH || A,AB,C,DE,BDE
121 | C,BDEH || A,ABC,DE,BCDE,BEH
122 | BCDE,H || ABC,E,DE,BEH,BDEH
123 | A,BCDEH || BC,E,DE,BEH,BDEH
124 | ABC,BCDE || ABCDE,AB2CDE,E,BE,H
125 | AB,C || A,BE,BCDE,BEH,BCDEH
126 | A,BC || B,E,BCDE,BEH,BCDEH
127 | A,B || C,BE,BDE,BEH,BDEH
128 | DE || A,B,BC,E,BH,BCH
129 | BDEH || A,AB,C,DE,BDE,BEH
130 | AB || A,C,BE,BDE,BEH,BDEH
131 | BE || AB,ABC,D,CD,E,H
132 | BCDE || ABC,E,BE,DE,BDE,H
133 | C,BC,ABC,BCDE,ABCDE,H,BH || BEH
134 | B,C,ABC,CD,ABCD,BE,ABCDE || H
135 | B,AB,D,BDE,ABDE,H,BEH || C
136 | C,BC,D,DE,H,BH,BEH || ABC
137 | C,ABC,CD,ABCD,BCDE,H,BEH || ABCDE
138 | E || A,B,ABC,D,BCD,BH,BCDH
139 | BEH || A,AB,ABC,D,CD,E,BE
140 | BCDEH || A,ABC,E,DE,BCDE,BEH,BDEH
141 | ABC || A,AB,E,BE,BCDE,BEH,BCDEH
142 | A || B,BC,E,DE,BEH,BDEH,BCDEH
143 | C,BC,ABC,CD,BCD,ABCD,BCDE,ABCDE,H,BH,BEH || -
144 | - || A,AB,ABC,E,BE,DE,BDE,BCDE,BEH,BDEH,BCDEH
)FIX";

const char* const kTable5 = R"FIX(# table5: walls of the 62 simplicial regions
# format: <region> | <main walls <= 0> || <main walls >= 0> | <coordinate walls>
1 | A,BC,CD,E,BH || BCD | abgh
2 | A,BC,E,BH || B,CD | abgh
3 | ABC,CD,E,BH || A,BCD | begh
4 | A,BC,E,BCDH || BCD,BH | abgh
5 | A,CD,E,BH || BC,D | abgh
6 | A,BC,CD,BEH || BCD,E | afgh
7 | A,BC,BEH || B,CD,E | afgh
8 | ABC,E,BH || A,B,CD | begh
9 | ABC,E,BCDH || A,BCD,BH | begh
10 | A,E,BCDH || BC,D,BH | abgh
11 | A,CD,BEH || BC,D,E | afgh
12 | A,B,C,BEH || CD,BE | acfh
13 | B,ABC,E,H || AB,CD | bceh
14 | ABC,BCD,E,H || ABCD,BH | begh
15 | A,D,E,BCH || BC,BH | abdg
16 | A,C,D,BEH || BC,DE | adfg
17 | A,B,BEH || C,D,BE | achj
18 | AB,C,BEH || A,CD,BE | cefh
19 | ABC,BE,H || AB,CD,E | cefh
20 | B,ABC,E || AB,CD,H | bchi
21 | ABC,BCD,E || B,ABCD,H | bghi
22 | BCD,E,H || ABC,D,BH | begh
23 | D,E,BCH || A,BC,BH | bdeg
24 | A,DE,BCH || BC,E,BH | adfg
25 | A,C,BDEH || BC,DE,BEH | adfg
26 | A,D,BEH || B,C,DE | adgj
27 | A,B,D,BEH || C,BDE | acdj
28 | AB,C,BE,H || CD,ABE | cefh
29 | B,ABC,CD,E || ABCD,H | bchi
30 | BC,D,E,H || ABC,BH | bdeg
31 | A,C,DE,BH || BC,BEH | adfg
32 | A,BDEH || B,C,DE,BEH | adgj
33 | AB,BEH || A,C,D,BE | cehj
34 | ABC,BE || AB,CD,E,H | cfhi
35 | BCD,E || B,ABC,D,H | bghi
36 | DE,BCH || A,BC,E,BH | defg
37 | C,DE,BH || A,BC,BEH | defg
38 | A,DE,BH || B,C,BEH | adgj
39 | A,B,BDEH || C,BDE,BEH | acdj
40 | AB,D,BEH || A,C,BDE | cdej
41 | AB,BE,H || C,D,ABE | cehj
42 | AB,C,BE || CD,ABE,H | cfhi
43 | ABC,CD,BE || ABCD,E,H | cfhi
44 | B,CD,E || ABC,D,H | bchi
45 | BC,D,E || B,ABC,H | bdgi
46 | BC,DE,H || ABC,E,BH | defg
47 | DE,BH || A,B,C,BEH | degj
48 | AB,BDEH || A,C,BDE,BEH | cdej
49 | AB,BE || C,D,ABE,H | chij
50 | CD,BE || ABC,D,E,H | cfhi
51 | BC,DE || B,ABC,E,H | dfgi
52 | B,DE,H || AB,C,BEH | cdej
53 | AB,BDE,H || C,ABDE,BEH | cdej
54 | AB,D,BE || C,ABDE,H | cdij
55 | C,D,BE || ABC,DE,H | cdfi
56 | B,C,DE || ABC,BE,H | cdfi
57 | B,DE || AB,C,BE,H | cdij
58 | BDE,H || AB,C,DE,BEH | cdej
59 | AB,BDE || C,BE,ABDE,H | cdij
60 | D,BE || AB,C,DE,H | cdij
61 | C,BDE || ABC,BE,DE,H | cdfi
62 | BDE || AB,C,BE,DE,H | cdij
)FIX";

const char* const kTable6 = R"FIX(# table6: rectangle-algorithm vectors v_P (22 partial quivers) and v_j (j = 1..4)
label,vector
LLL,"1,0,0,0,0,0,0,0,0,0"
LLR,"0,0,1,0,0,0,0,0,1,0"
LRL,"1,1,0,0,0,0,1,1,0,0"
RLL,"1,0,0,1,0,0,0,0,0,1"
LRR,"0,1,0,0,0,0,0,1,1,0"
RLR,"0,0,1,1,0,0,0,0,1,1"
RRL,"1,0,0,0,0,0,1,0,0,0"
RRR,"0,0,0,0,0,0,0,0,1,0"
LL-,"0,0,0,0,0,0,0,1,0,0"
LR-,"0,1,0,0,0,1,0,0,0,0"
RL-,"0,0,0,0,0,1,0,0,0,1"
RR-,"0,0,0,1,0,0,0,0,0,0"
-LL,"1,0,0,0,0,0,0,0,0,1"
-LR,"0,0,1,0,0,0,0,0,1,1"
-RL,"1,1,0,0,0,0,1,0,0,0"
-RR,"0,1,0,0,0,0,0,0,1,0"
L--,"0,1,0,0,0,0,0,1,0,0"
R--,"0,0,0,1,0,0,0,0,0,1"
-L-,"0,0,1,0,0,0,0,0,0,1"
-R-,"0,1,0,0,0,0,1,0,0,0"
--L,"1,0,0,0,1,0,0,0,0,0"
--R,"0,0,0,0,1,0,0,0,1,0"
1,"1,0,0,0,1,0,0,0,1,0"
2,"0,0,1,0,0,0,1,0,0,0"
3,"0,1,0,0,0,1,0,0,0,1"
4,"0,0,0,1,0,0,0,1,0,0"
)FIX";

const char* const kTable7 = R"FIX(# table7: incidence of the 26 vectors (columns) with the 32 walls (rows); x = vector lies on wall
columns LLL LLR LRL RLL LRR RLR RRL RRR LL- LR- RL- RR- -LL -LR -RL -RR L-- R-- -L- -R- --L --R 1 2 3 4
A .x..xx.xxxxx.x.xxxxxx.xxxx
B x..xx..xxxxxx..xxx..xxxxxx
C xxx.x.xxx.xx..xxx..xxxxxxx
D xx....xx.xx.xxxx..xxxxxxxx
E xx.x.xxxxx.xxx...xx.xxxxxx
H x.xx..x.xxxxx.x.xxxx.xxxxx
AB ..x.x.xxxxxx..xxxx..x.xxxx
BC x...xx.xx.xx.x.xx.x.xxxxxx
CD xx.x.xxx..x...xx.x.xxxxxxx
DE xxx.x.xx.x..xx..x.x.xxxxxx
BE x.xx...xxx.xx.x..x.xxxxxxx
BH xx.x.x..xxxxxx..xx...xxxxx
ABC ..xxxxxxx.xxxxxxx.x.x.xxxx
BCD x..x...x..x..x.x.xx.xxxxxx
ABE ......xxxx.x.....x.xx.xxxx
BDE x...x..x.x..x.x.x..xxxxxxx
BCH xx......x.xx....x.x..xxxxx
BEH xxxxxx..xx.xxxxx.x.x.xxxxx
ABCD ......xx..x.xxxx.xx.x.xxxx
ABDE ..x.x.xx.x......x..xx.xxxx
BCDH xx.x.x....x......xx..xxxxx
BDEH xx.......x..xxxxx..x.xxxxx
a .x..xx.xxxxx.x.xxxxx.x.xxx
b xx.x.xxxx.xxxx...xx.xxxx.x
c x.xxx.xxxxxxx.xxxx.xxxx.xx
d xxx.x.xxxxx.xxxxx.xxxxxxx.
e xxxxxxxxxxxxxxxxxxxx...xxx
f xxxxxxxxx..xxxxxxxxxxxxx.x
g xx.xxx.xxxxxxx.xxxx.xxx.xx
h xx.x.xxx.xxxxxxx.xxxxxxxx.
i x.xx..x.xxxxx.x.xxxxx..xxx
j xxx.x.xxxx.x..xxx..xxxxx.x
)FIX";

const char* const kTable8 = R"FIX(# table8: simplicial region <-> reduced word (one representative of its commutation class)
region,word
1,1 3 2 1 3 4 3 2 1 3
2,1 3 2 1 3 4 2 3 2 1
3,3 2 1 2 3 4 3 2 1 3
4,1 3 2 4 1 3 2 4 1 3
5,1 3 2 3 4 3 2 1 2 3
6,1 2 3 2 1 4 3 2 1 3
7,1 2 3 2 1 4 2 3 2 1
8,3 2 1 2 3 4 2 3 2 1
9,3 2 1 2 4 3 2 4 1 3
10,1 3 2 4 3 2 1 2 4 3
11,1 2 3 2 4 3 2 1 2 3
12,1 2 3 1 2 1 4 3 2 1
13,3 2 1 3 2 3 4 3 2 1
14,3 2 1 4 3 2 3 4 1 3
15,1 3 4 3 2 3 1 2 4 3
16,1 2 3 4 3 2 3 1 2 3
17,1 2 3 1 2 4 3 2 1 2
18,2 1 2 3 2 1 4 3 2 1
19,2 3 2 1 2 3 4 3 2 1
20,3 2 1 3 4 2 3 2 4 1
21,3 2 1 4 3 2 4 3 4 1
22,3 2 4 3 2 1 2 3 4 3
23,3 4 3 2 1 2 3 2 4 3
24,1 4 3 4 2 3 1 2 4 3
25,1 2 4 3 4 2 3 1 2 3
26,1 2 3 4 3 2 1 2 3 2
27,1 2 3 4 3 1 2 1 3 2
28,2 3 1 2 1 3 4 3 2 1
29,3 2 1 3 4 3 2 3 4 1
30,3 4 3 2 3 1 2 3 4 3
31,1 4 3 2 3 4 3 1 2 3
32,1 2 4 3 4 2 1 2 3 2
33,2 1 2 3 2 4 3 2 1 2
34,2 3 2 1 4 2 3 2 4 1
35,3 2 4 3 2 1 2 4 3 4
36,4 3 4 2 1 2 3 2 4 3
37,4 3 2 1 2 3 4 3 2 3
38,1 4 3 2 3 4 1 2 3 2
39,1 2 4 3 4 1 2 1 3 2
40,2 1 2 3 4 3 2 1 3 2
41,2 3 1 2 3 4 3 2 1 2
42,2 3 1 2 1 4 3 2 4 1
43,2 3 2 1 4 3 2 3 4 1
44,3 2 3 4 3 2 1 2 3 4
45,3 4 3 2 3 1 2 4 3 4
46,4 3 4 2 3 1 2 3 4 3
47,4 3 2 1 2 3 4 2 3 2
48,2 1 2 4 3 4 2 1 3 2
49,2 3 1 2 4 3 2 1 2 4
50,2 3 2 4 3 2 1 2 3 4
51,4 3 4 2 3 1 2 4 3 4
52,4 3 2 1 3 2 3 4 3 2
53,2 1 4 3 2 3 4 1 3 2
54,2 3 4 3 1 2 1 3 2 4
55,2 3 4 3 2 3 1 2 3 4
56,4 3 2 3 4 3 1 2 3 4
57,4 3 2 3 4 1 2 3 2 4
58,4 2 3 2 1 2 3 4 3 2
59,4 2 3 4 1 2 1 3 2 4
60,2 3 4 3 2 1 2 3 2 4
61,4 2 3 2 4 3 1 2 3 4
62,4 2 3 2 4 1 2 3 2 4
)FIX";

}  // namespace a4cb
