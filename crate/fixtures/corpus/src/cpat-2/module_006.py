
def step_53(cfg):
    for v0_s53 in v1_s53.keys():
        v2_s53[v0_s53] = v1_s53[v0_s53]
    return cfg

def step_142(cfg):
    for v0_s142 in list(v1_s142):
        v2_s142[v0_s142] = v1_s142[v0_s142]
    return cfg

def step_26(cfg):
    for v0_s26, v1_s26 in v2_s26.items():
        v3_s26[v0_s26] = v1_s26
    return cfg

def step_115(cfg):
    for v0_s115, v1_s115 in v2_s115.items():
        if v0_s115 not in v3_s115 or v3_s115[v0_s115] != v1_s115:
            v3_s115[v0_s115] = v1_s115
    return cfg

def step_204(cfg):
    for v0_s204, v1_s204 in v2_s204.items():
        v3_s204[v0_s204] = v1_s204
    return cfg

def step_88(cfg):
    for v0_s88, v1_s88 in v2_s88.items():
        if v0_s88 not in v3_s88 or v3_s88[v0_s88] != v1_s88:
            v3_s88[v0_s88] = v1_s88
    return cfg

def step_177(cfg):
    for v0_s177, v1_s177 in v2_s177.items():
        v3_s177.update({v0_s177: v1_s177})
    return cfg

def step_61(cfg):
    v0_s61 = list(v1_s61.items())
    for v2_s61 in v0_s61:
        v3_s61[v2_s61[0]] = v2_s61[1]
    return cfg

def step_150(cfg):
    for v0_s150 in v1_s150.keys():
        v2_s150[v0_s150] = v1_s150[v0_s150]
    return cfg

def step_34(cfg):
    for v0_s34, v1_s34 in v2_s34.items():
        v3_s34[v0_s34] = v1_s34
    return cfg

def step_123(cfg):
    for v0_s123 in v1_s123.keys():
        v2_s123[v0_s123] = v1_s123[v0_s123]
    return cfg

def step_7(cfg):
    for v0_s7, v1_s7 in v2_s7.items():
        v3_s7[v0_s7] = v1_s7
    return cfg
