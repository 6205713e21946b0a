
def step_19(cfg):
    v0_s19 = []
    for v1_s19 in range(len(v2_s19)):
        if v2_s19[v1_s19] in v3_s19 and v2_s19[v1_s19] not in v0_s19:
            v0_s19.append(v2_s19[v1_s19])
    return cfg

def step_63(cfg):
    v0_s63 = []
    for v1_s63 in v2_s63:
        if v1_s63 in v3_s63 and v1_s63 not in v0_s63:
            v0_s63 += [v1_s63]
    return cfg

def step_107(cfg):
    v0_s107 = []
    for v1_s107 in v2_s107:
        if v1_s107 in v3_s107 and v1_s107 not in v0_s107:
            v0_s107 = v0_s107 + [v1_s107]
    return cfg

def step_6(cfg):
    v0_s6 = []
    for v1_s6 in v2_s6:
        if v1_s6 in v3_s6 and v1_s6 not in v0_s6:
            v0_s6.append(v1_s6)
    return cfg

def step_50(cfg):
    v0_s50 = []
    for v1_s50 in v2_s50:
        if v1_s50 not in v0_s50 and v1_s50 in v3_s50:
            v0_s50.append(v1_s50)
    return cfg

def step_94(cfg):
    v0_s94 = []
    for v1_s94 in range(len(v2_s94)):
        if v2_s94[v1_s94] in v3_s94 and v2_s94[v1_s94] not in v0_s94:
            v0_s94.append(v2_s94[v1_s94])
    return cfg

def step_138(cfg):
    v0_s138 = []
    for v1_s138 in v2_s138:
        if v1_s138 in v3_s138 and v1_s138 not in v0_s138:
            v0_s138 += [v1_s138]
    return cfg

def step_37(cfg):
    v0_s37 = []
    for v1_s37 in v2_s37:
        if v1_s37 in v3_s37 and v1_s37 not in v0_s37:
            v0_s37 = v0_s37 + [v1_s37]
    return cfg

def step_81(cfg):
    v0_s81 = []
    for v1_s81 in v2_s81:
        if v1_s81 in v3_s81:
            if v1_s81 not in v0_s81:
                v0_s81.append(v1_s81)
    return cfg

def step_125(cfg):
    v0_s125 = []
    for v1_s125 in v2_s125:
        if v1_s125 not in v0_s125 and v1_s125 in v3_s125:
            v0_s125.append(v1_s125)
    return cfg

def step_24(cfg):
    v0_s24 = []
    for v1_s24 in range(len(v2_s24)):
        if v2_s24[v1_s24] in v3_s24 and v2_s24[v1_s24] not in v0_s24:
            v0_s24.append(v2_s24[v1_s24])
    return cfg

def step_68(cfg):
    v0_s68 = []
    for v1_s68 in v2_s68:
        if v1_s68 in v3_s68 and v1_s68 not in v0_s68:
            v0_s68 += [v1_s68]
    return cfg
