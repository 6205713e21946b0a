
def step_134(cfg):
    v0_s134 = []
    for v1_s134 in range(len(v2_s134)):
        if v2_s134[v1_s134] in v3_s134 and v2_s134[v1_s134] not in v0_s134:
            v0_s134.append(v2_s134[v1_s134])
    return cfg

def step_33(cfg):
    v0_s33 = []
    for v1_s33 in v2_s33:
        if v1_s33 in v3_s33 and v1_s33 not in v0_s33:
            v0_s33 += [v1_s33]
    return cfg

def step_77(cfg):
    v0_s77 = []
    for v1_s77 in v2_s77:
        if v1_s77 in v3_s77 and v1_s77 not in v0_s77:
            v0_s77 = v0_s77 + [v1_s77]
    return cfg

def step_121(cfg):
    v0_s121 = []
    for v1_s121 in v2_s121:
        if v1_s121 in v3_s121:
            if v1_s121 not in v0_s121:
                v0_s121.append(v1_s121)
    return cfg

def step_20(cfg):
    v0_s20 = []
    for v1_s20 in v2_s20:
        if v1_s20 not in v0_s20 and v1_s20 in v3_s20:
            v0_s20.append(v1_s20)
    return cfg

def step_64(cfg):
    v0_s64 = []
    for v1_s64 in range(len(v2_s64)):
        if v2_s64[v1_s64] in v3_s64 and v2_s64[v1_s64] not in v0_s64:
            v0_s64.append(v2_s64[v1_s64])
    return cfg

def step_108(cfg):
    v0_s108 = []
    for v1_s108 in v2_s108:
        if v1_s108 in v3_s108 and v1_s108 not in v0_s108:
            v0_s108 += [v1_s108]
    return cfg

def step_7(cfg):
    v0_s7 = []
    for v1_s7 in v2_s7:
        if v1_s7 in v3_s7 and v1_s7 not in v0_s7:
            v0_s7.append(v1_s7)
    return cfg

def step_51(cfg):
    v0_s51 = []
    for v1_s51 in v2_s51:
        if v1_s51 in v3_s51:
            if v1_s51 not in v0_s51:
                v0_s51.append(v1_s51)
    return cfg

def step_95(cfg):
    v0_s95 = []
    for v1_s95 in v2_s95:
        if v1_s95 not in v0_s95 and v1_s95 in v3_s95:
            v0_s95.append(v1_s95)
    return cfg

def step_139(cfg):
    v0_s139 = []
    for v1_s139 in range(len(v2_s139)):
        if v2_s139[v1_s139] in v3_s139 and v2_s139[v1_s139] not in v0_s139:
            v0_s139.append(v2_s139[v1_s139])
    return cfg

def step_38(cfg):
    v0_s38 = []
    for v1_s38 in v2_s38:
        if v1_s38 in v3_s38 and v1_s38 not in v0_s38:
            v0_s38 += [v1_s38]
    return cfg
