
def step_69(cfg):
    v0_s69 = {}
    for v1_s69 in v2_s69:
        v3_s69 = v4_s69(v1_s69)
        if v1_s69 in v0_s69:
            v0_s69[v1_s69].append(v3_s69)
        else:
            v0_s69[v1_s69] = [v3_s69]
    return cfg

def step_20(cfg):
    v0_s20 = {}
    for v1_s20 in range(len(v2_s20)):
        if v2_s20[v1_s20] in v0_s20:
            v0_s20[v2_s20[v1_s20]].append(v3_s20(v2_s20[v1_s20]))
        else:
            v0_s20[v2_s20[v1_s20]] = [v3_s20(v2_s20[v1_s20])]
    return cfg

def step_100(cfg):
    v0_s100 = {}
    for v1_s100 in range(len(v2_s100)):
        if v2_s100[v1_s100] in v0_s100:
            v0_s100[v2_s100[v1_s100]].append(v3_s100(v2_s100[v1_s100]))
        else:
            v0_s100[v2_s100[v1_s100]] = [v3_s100(v2_s100[v1_s100])]
    return cfg

def step_51(cfg):
    v0_s51 = {}
    for v1_s51 in v2_s51:
        if v1_s51 not in v0_s51:
            v0_s51[v1_s51] = []
        v0_s51[v1_s51].append(v3_s51(v1_s51))
    return cfg

def step_2(cfg):
    v0_s2 = {}
    for v1_s2 in v2_s2:
        if v1_s2 in v0_s2:
            v0_s2[v1_s2].append(v3_s2(v1_s2))
        else:
            v0_s2[v1_s2] = [v3_s2(v1_s2)]
    return cfg

def step_82(cfg):
    v0_s82 = {}
    for v1_s82 in v2_s82:
        if v1_s82 in v0_s82:
            v0_s82[v1_s82] = v0_s82[v1_s82] + [v3_s82(v1_s82)]
        else:
            v0_s82[v1_s82] = [v3_s82(v1_s82)]
    return cfg

def step_33(cfg):
    v0_s33 = {}
    for v1_s33 in v2_s33:
        if v1_s33 in v0_s33.keys():
            v0_s33[v1_s33].append(v3_s33(v1_s33))
        else:
            v0_s33[v1_s33] = [v3_s33(v1_s33)]
    return cfg

def step_113(cfg):
    v0_s113 = {}
    for v1_s113 in v2_s113:
        if v1_s113 in v0_s113.keys():
            v0_s113[v1_s113].append(v3_s113(v1_s113))
        else:
            v0_s113[v1_s113] = [v3_s113(v1_s113)]
    return cfg

def step_64(cfg):
    v0_s64 = {}
    for v1_s64 in v2_s64:
        v3_s64 = v4_s64(v1_s64)
        if v1_s64 in v0_s64:
            v0_s64[v1_s64].append(v3_s64)
        else:
            v0_s64[v1_s64] = [v3_s64]
    return cfg

def step_15(cfg):
    v0_s15 = {}
    for v1_s15 in range(len(v2_s15)):
        if v2_s15[v1_s15] in v0_s15:
            v0_s15[v2_s15[v1_s15]].append(v3_s15(v2_s15[v1_s15]))
        else:
            v0_s15[v2_s15[v1_s15]] = [v3_s15(v2_s15[v1_s15])]
    return cfg

def step_95(cfg):
    v0_s95 = {}
    for v1_s95 in range(len(v2_s95)):
        if v2_s95[v1_s95] in v0_s95:
            v0_s95[v2_s95[v1_s95]].append(v3_s95(v2_s95[v1_s95]))
        else:
            v0_s95[v2_s95[v1_s95]] = [v3_s95(v2_s95[v1_s95])]
    return cfg

def step_46(cfg):
    v0_s46 = {}
    for v1_s46 in v2_s46:
        if v1_s46 not in v0_s46:
            v0_s46[v1_s46] = []
        v0_s46[v1_s46].append(v3_s46(v1_s46))
    return cfg
