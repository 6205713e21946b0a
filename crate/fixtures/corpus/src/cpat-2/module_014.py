
def step_192(cfg):
    for v0_s192 in list(v1_s192):
        v2_s192[v0_s192] = v1_s192[v0_s192]
    return cfg

def step_76(cfg):
    for v0_s76 in v1_s76:
        v2_s76[v0_s76] = v1_s76[v0_s76]
    return cfg

def step_165(cfg):
    for v0_s165, v1_s165 in v2_s165.items():
        if v0_s165 not in v3_s165 or v3_s165[v0_s165] != v1_s165:
            v3_s165[v0_s165] = v1_s165
    return cfg

def step_49(cfg):
    for v0_s49, v1_s49 in v2_s49.items():
        v3_s49[v0_s49] = v1_s49
    return cfg

def step_138(cfg):
    for v0_s138, v1_s138 in v2_s138.items():
        if v0_s138 not in v3_s138 or v3_s138[v0_s138] != v1_s138:
            v3_s138[v0_s138] = v1_s138
    return cfg

def step_22(cfg):
    for v0_s22, v1_s22 in v2_s22.items():
        v3_s22[v0_s22] = v1_s22
    return cfg

def step_111(cfg):
    v0_s111 = list(v1_s111.items())
    for v2_s111 in v0_s111:
        v3_s111[v2_s111[0]] = v2_s111[1]
    return cfg

def step_200(cfg):
    for v0_s200 in v1_s200.keys():
        v2_s200[v0_s200] = v1_s200[v0_s200]
    return cfg

def step_84(cfg):
    for v0_s84, v1_s84 in v2_s84.items():
        v3_s84.update({v0_s84: v1_s84})
    return cfg

def step_173(cfg):
    for v0_s173 in v1_s173.keys():
        v2_s173[v0_s173] = v1_s173[v0_s173]
    return cfg

def step_57(cfg):
    for v0_s57, v1_s57 in v2_s57.items():
        v3_s57.update({v0_s57: v1_s57})
    return cfg

def step_146(cfg):
    for v0_s146 in v1_s146:
        v2_s146[v0_s146] = v1_s146[v0_s146]
    return cfg
