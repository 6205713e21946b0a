
def step_50(cfg):
    v0_s50 = []
    for v1_s50 in range(len(v2_s50)):
        if v3_s50(v2_s50[v1_s50]):
            v0_s50 += [v2_s50[v1_s50]]
    return cfg

def step_281(cfg):
    v0_s281 = []
    for v1_s281 in range(len(v2_s281)):
        if v3_s281(v2_s281[v1_s281]):
            v0_s281 += [v2_s281[v1_s281]]
    return cfg

def step_512(cfg):
    v0_s512 = []
    for v1_s512 in range(len(v2_s512)):
        if v3_s512(v2_s512[v1_s512]):
            v0_s512 += [v2_s512[v1_s512]]
    return cfg

def step_743(cfg):
    v0_s743 = []
    for v1_s743 in range(len(v2_s743)):
        if v3_s743(v2_s743[v1_s743]):
            v0_s743 += [v2_s743[v1_s743]]
    return cfg

def step_63(cfg):
    v0_s63 = []
    for v1_s63 in range(len(v2_s63)):
        if v3_s63(v2_s63[v1_s63]):
            v0_s63 = v0_s63 + [v2_s63[v1_s63]]
    return cfg

def step_294(cfg):
    v0_s294 = []
    for v1_s294 in range(len(v2_s294)):
        if v3_s294(v2_s294[v1_s294]):
            v0_s294 = v0_s294 + [v2_s294[v1_s294]]
    return cfg

def step_525(cfg):
    v0_s525 = []
    for v1_s525 in range(len(v2_s525)):
        if v3_s525(v2_s525[v1_s525]):
            v0_s525 = v0_s525 + [v2_s525[v1_s525]]
    return cfg

def step_756(cfg):
    v0_s756 = []
    for v1_s756 in range(len(v2_s756)):
        if v3_s756(v2_s756[v1_s756]):
            v0_s756 = v0_s756 + [v2_s756[v1_s756]]
    return cfg

def step_76(cfg):
    v0_s76 = []
    for v1_s76 in range(len(v2_s76)):
        v3_s76 = v2_s76[v1_s76]
        if v4_s76(v3_s76):
            v0_s76.append(v3_s76)
    return cfg

def step_307(cfg):
    v0_s307 = []
    for v1_s307 in range(len(v2_s307)):
        v3_s307 = v2_s307[v1_s307]
        if v4_s307(v3_s307):
            v0_s307.append(v3_s307)
    return cfg

def step_538(cfg):
    v0_s538 = []
    for v1_s538 in range(len(v2_s538)):
        v3_s538 = v2_s538[v1_s538]
        if v4_s538(v3_s538):
            v0_s538.append(v3_s538)
    return cfg

def step_769(cfg):
    v0_s769 = []
    for v1_s769 in range(len(v2_s769)):
        v3_s769 = v2_s769[v1_s769]
        if v4_s769(v3_s769):
            v0_s769.append(v3_s769)
    return cfg
