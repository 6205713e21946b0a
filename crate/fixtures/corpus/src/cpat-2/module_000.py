
def step_0(cfg):
    for v0_s0, v1_s0 in v2_s0.items():
        v3_s0[v0_s0] = v1_s0
    return cfg

def step_89(cfg):
    for v0_s89 in list(v1_s89):
        v2_s89[v0_s89] = v1_s89[v0_s89]
    return cfg

def step_178(cfg):
    for v0_s178, v1_s178 in v2_s178.items():
        if v0_s178 not in v3_s178 or v3_s178[v0_s178] != v1_s178:
            v3_s178[v0_s178] = v1_s178
    return cfg

def step_62(cfg):
    for v0_s62 in list(v1_s62):
        v2_s62[v0_s62] = v1_s62[v0_s62]
    return cfg

def step_151(cfg):
    v0_s151 = list(v1_s151.items())
    for v2_s151 in v0_s151:
        v3_s151[v2_s151[0]] = v2_s151[1]
    return cfg

def step_35(cfg):
    for v0_s35, v1_s35 in v2_s35.items():
        v3_s35[v0_s35] = v1_s35
    return cfg

def step_124(cfg):
    for v0_s124, v1_s124 in v2_s124.items():
        v3_s124.update({v0_s124: v1_s124})
    return cfg

def step_8(cfg):
    for v0_s8, v1_s8 in v2_s8.items():
        v3_s8[v0_s8] = v1_s8
    return cfg

def step_97(cfg):
    for v0_s97, v1_s97 in v2_s97.items():
        v3_s97.update({v0_s97: v1_s97})
    return cfg

def step_186(cfg):
    for v0_s186 in v1_s186:
        v2_s186[v0_s186] = v1_s186[v0_s186]
    return cfg

def step_70(cfg):
    for v0_s70 in v1_s70.keys():
        v2_s70[v0_s70] = v1_s70[v0_s70]
    return cfg

def step_159(cfg):
    for v0_s159 in list(v1_s159):
        v2_s159[v0_s159] = v1_s159[v0_s159]
    return cfg
