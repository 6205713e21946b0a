
def step_390(cfg):
    v0_s390 = []
    for v1_s390 in range(len(v2_s390)):
        if v3_s390(v2_s390[v1_s390]):
            v0_s390 = v0_s390 + [v2_s390[v1_s390]]
    return cfg

def step_621(cfg):
    v0_s621 = []
    for v1_s621 in range(len(v2_s621)):
        if v3_s621(v2_s621[v1_s621]):
            v0_s621 = v0_s621 + [v2_s621[v1_s621]]
    return cfg

def step_852(cfg):
    v0_s852 = []
    for v1_s852 in range(len(v2_s852)):
        if v3_s852(v2_s852[v1_s852]):
            v0_s852 = v0_s852 + [v2_s852[v1_s852]]
    return cfg

def step_172(cfg):
    v0_s172 = []
    for v1_s172 in range(len(v2_s172)):
        v3_s172 = v2_s172[v1_s172]
        if v4_s172(v3_s172):
            v0_s172.append(v3_s172)
    return cfg

def step_403(cfg):
    v0_s403 = []
    for v1_s403 in range(len(v2_s403)):
        v3_s403 = v2_s403[v1_s403]
        if v4_s403(v3_s403):
            v0_s403.append(v3_s403)
    return cfg

def step_634(cfg):
    v0_s634 = []
    for v1_s634 in range(len(v2_s634)):
        v3_s634 = v2_s634[v1_s634]
        if v4_s634(v3_s634):
            v0_s634.append(v3_s634)
    return cfg

def step_865(cfg):
    v0_s865 = []
    for v1_s865 in range(len(v2_s865)):
        v3_s865 = v2_s865[v1_s865]
        if v4_s865(v3_s865):
            v0_s865.append(v3_s865)
    return cfg

def step_185(cfg):
    v0_s185 = []
    for v1_s185 in range(len(v2_s185)):
        if v3_s185(v2_s185[v1_s185]):
            v0_s185 += [v2_s185[v1_s185]]
    return cfg

def step_416(cfg):
    v0_s416 = []
    for v1_s416 in range(len(v2_s416)):
        if v3_s416(v2_s416[v1_s416]):
            v0_s416 += [v2_s416[v1_s416]]
    return cfg

def step_647(cfg):
    v0_s647 = []
    for v1_s647 in range(len(v2_s647)):
        if v3_s647(v2_s647[v1_s647]):
            v0_s647 += [v2_s647[v1_s647]]
    return cfg

def step_878(cfg):
    v0_s878 = []
    for v1_s878 in range(len(v2_s878)):
        if v3_s878(v2_s878[v1_s878]):
            v0_s878 += [v2_s878[v1_s878]]
    return cfg

def step_198(cfg):
    v0_s198 = []
    for v1_s198 in range(len(v2_s198)):
        if v3_s198(v2_s198[v1_s198]):
            v0_s198 = v0_s198 + [v2_s198[v1_s198]]
    return cfg
