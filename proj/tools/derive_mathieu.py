import itertools, random, json, sys
from sympy.combinatorics import Permutation, PermutationGroup
random.seed(1)
def cyc(n, cycles):
    img=list(range(n))
    for c in cycles:
        for i,x in enumerate(c):
            img[x-1]=c[(i+1)%len(c)]-1
    return Permutation(img)
m24=PermutationGroup([cyc(24,[(1,4),(2,7),(3,17),(5,13),(6,9),(8,15),(10,19),(11,18),(12,21),(14,16),(20,24),(22,23)]),
                      cyc(24,[(1,4,6),(2,21,14),(3,9,15),(5,18,10),(13,17,16),(19,24,23)])])
def small_gens(G, n_keep, order):
    els=[G.random() for _ in range(200)]
    for a in els:
        for b in els[:40]:
            H=PermutationGroup([a,b])
            if H.order()==order: return [a,b]
    raise SystemExit("no 2-gen found")
def restrict(p, pts):
    idx={x:i for i,x in enumerate(pts)}
    return [idx[p(x)] for x in pts]
# M23, M22
M23=m24.stabilizer(23); g23=small_gens(M23,23,10200960)
M22=M23.stabilizer(22); g22=small_gens(M22,22,443520)
# swap 22<->23
T=[p for p in m24.generate_schreier_sims() if p(22)==23 and p(23)==22][0] if False else None
# find swap cheaply
for _ in range(100000):
    p=m24.random()
    if p(22)==23 and p(23)==22: T=p; break
print("swap found", T is not None, file=sys.stderr)
# ---- our S(3,6,22) ----
gf_add=lambda a,b:a^b
L=[0,0,1,2]; E=[1,2,3]  # log/exp with g=2, g^2=3
def gf_mul(a,b):
    if a==0 or b==0: return 0
    return E[(L[a]+L[b])%3]
def gf_inv(a): return E[(-L[a])%3]
vecs=[v for v in itertools.product(range(4),repeat=3) if any(v)]
def normalize(v):
    for c in v:
        if c: inv=gf_inv(c); return tuple(gf_mul(inv,x) for x in v)
pts=[v for v in vecs if normalize(v)==v]
assert len(pts)==21
pidx={p:i for i,p in enumerate(pts)}
def dot(a,b):
    s=0
    for x,y in zip(a,b): s^=gf_mul(x,y)
    return s
lines=[tuple(sorted(pidx[p] for p in pts if dot(p,l)==0)+[21]) for l in pts]
oval=[(1,t,gf_mul(t,t)) for t in range(4)]+[(0,0,1),(0,1,0)]
oval=tuple(sorted(pidx[normalize(v)] for v in oval))
mats=[]
for i in range(3):
    for j in range(3):
        if i!=j:
            for a in (1,2):
                M=[[1 if r==c else 0 for c in range(3)] for r in range(3)]; M[i][j]=a; mats.append(M)
def act(M,v):
    return normalize(tuple( (lambda c: (gf_mul(v[0],M[0][c])^gf_mul(v[1],M[1][c])^gf_mul(v[2],M[2][c])))(c) for c in range(3)))
perms=[[pidx[act(M,p)] for p in pts] for M in mats]
orb={oval}; fr=[oval]
while fr:
    s=fr.pop(); 
    for pm in perms:
        t=tuple(sorted(pm[x] for x in s))
        if t not in orb: orb.add(t); fr.append(t)
print("oval orbit",len(orb),file=sys.stderr)
ours=sorted(lines+sorted(orb))
assert len(ours)==77
# M24-derived design: octads containing 22,23 -> hexads on 0..21
# octads = orbit of one octad; find octad: take the 8-set fixed? Use: blocks of S(5,8,24); octad through 5 points = closure; easier: orbit of sets under M24 of size 759
# find an octad: pointwise stabilizer of 5 pts fixes exactly the other 3 of the octad
S5=m24.pointwise_stabilizer([0,1,2,3,4]) if hasattr(m24,'pointwise_stabilizer') else None
fix=[0,1,2,3,4]+[x for o in S5.orbits() if len(o)==3 for x in o]
print("octad", fix, file=sys.stderr)
octad=frozenset(fix)
# blocks of S(3,6,22): octads containing 22,23. Generate from M22 orbit of one such octad
oc=None
for g in [m24.random() for _ in range(5000)]:
    im=frozenset(g(x) for x in octad)
    if 22 in im and 23 in im: oc=im; break
base=tuple(sorted(oc-{22,23}))
orbit={base}; fr=[base]
while fr:
    s=fr.pop()
    for g in M22.generators:
        t=tuple(sorted(g(x) for x in s))
        if t not in orbit: orbit.add(t); fr.append(t)
theirs=sorted(orbit); assert len(theirs)==77, len(theirs)
def block_map(blocks, n):
    d={}
    for b in blocks:
        for tr in itertools.combinations(b,3): d[tr]=set(b)
    return d
def iso(A,B,n):
    tA=block_map(A,n); tB=block_map(B,n)
    m={}
    def ok(x,y):
        # check all triples with x
        assigned=[a for a in m if a!=x]
        for a,b in itertools.combinations(assigned,2):
            tri=tuple(sorted((a,b,x)))
            blk=tA[tri]
            tri2=tuple(sorted((m[a],m[b],y)))
            blk2=tB[tri2]
            for z in blk:
                if z in m and m[z] not in blk2: return False
        return True
    used=set()
    def rec(x):
        if x==n: return True
        for y in range(n):
            if y in used: continue
            m[x]=y
            if ok(x,y):
                used.add(y)
                if rec(x+1): return True
                used.discard(y)
            del m[x]
        return False
    assert rec(0)
    return [m[i] for i in range(n)]
phi=iso(theirs, ours, 22)  # their point i -> our point phi[i]
inv={phi[i]:i for i in range(22)}
def conj(p):  # our-labelled permutation
    return [phi[p(inv[x])] for x in range(22)]
m22_ours=[conj(g) for g in g22]
swap_ours=[phi[T(inv[x])] for x in range(22)]
oursset=set(ours)
for g in m22_ours+[swap_ours]:
    assert set(tuple(sorted(g[x] for x in b)) for b in ours)==oursset
# ---- Paley 3-(12,6,2) ----
qr={(x*x)%11 for x in range(1,11)}
chi=lambda x: 0 if x%11==0 else (1 if x%11 in qr else -1)
H=[[0]*12 for _ in range(12)]
for j in range(1,12): H[0][j]=1; H[j][0]=-1
for i in range(11):
    for j in range(11): H[i+1][j+1]=chi(j-i)
for i in range(12): H[i][i]+=1
for j in range(12):
    if H[0][j]<0:
        for i in range(12): H[i][j]=-H[i][j]
for i in range(12):
    if H[i][0]<0: H[i]=[-x for x in H[i]]
pb=[]
for i in range(1,12):
    pb.append(tuple(j for j in range(12) if H[i][j]>0)); pb.append(tuple(j for j in range(12) if H[i][j]<0))
pb=sorted(pb); pbs=set(pb)
# enumerate automorphisms by backtracking
tri={}
for b in pb:
    for t in itertools.combinations(b,3): tri.setdefault(t,[]).append(set(b))
def autos():
    res=[]; m={}; used=set()
    def ok(x,y):
        for a,b in itertools.combinations([k for k in m if k!=x],2):
            for blk in tri[tuple(sorted((a,b,x)))]:
                img={m[z] for z in blk if z in m}
                if not any(img<=B2 for B2 in tri[tuple(sorted((m[a],m[b],y)))]): return False
        return True
    def rec(x):
        if x==12:
            p=[m[i] for i in range(12)]
            if set(tuple(sorted(p[z] for z in b)) for b in pb)==pbs: res.append(p)
            return
        for y in range(12):
            if y in used: continue
            m[x]=y
            if ok(x,y): used.add(y); rec(x+1); used.discard(y)
            del m[x]
    rec(0); return res
A=autos(); print("aut(3-12-6-2)",len(A),file=sys.stderr)
AG=PermutationGroup([Permutation(p) for p in A[:]])
m11_12=small_gens(AG,12,7920)
m12g=[cyc(12,[tuple(range(1,12))]), cyc(12,[(3,7,11,8),(4,10,5,6)]), cyc(12,[(1,12),(2,11),(3,6),(4,8),(5,9),(7,10)])]
m11g=[cyc(11,[tuple(range(1,12))]), cyc(11,[(3,7,11,8),(4,10,5,6)])]
out={"M24":[list(g.array_form) for g in m24.generators],
 "M23":[restrict(g,list(range(23))) for g in g23],
 "M22":m22_ours, "AutM22":m22_ours+[swap_ours],
 "M12":[list(g.array_form) for g in m12g],
 "M11on11":[list(g.array_form) for g in m11g],
 "M11on12":[list(g.array_form) for g in m11_12]}
json.dump(out, open("mathieu.json","w"))
print(json.dumps(out))
