
def step_123(cfg):
    v0_s123 = []
    for v1_s123 in v2_s123:
        if v1_s123 in v3_s123 and v1_s123 not in v0_s123:
            v0_s123 += [v1_s123]
    return cfg

def step_22(cfg):
    v0_s22 = []
    for v1_s22 in v2_s22:
        if v1_s22 in v3_s22 and v1_s22 not in v0_s22:
            v0_s22 = v0_s22 + [v1_s22]
    return cfg

def step_66(cfg):
    v0_s66 = []
    for v1_s66 in v2_s66:
        if v1_s66 in v3_s66:
            if v1_s66 not in v0_s66:
                v0_s66.append(v1_s66)
    return cfg

def step_110(cfg):
    v0_s110 = []
    for v1_s110 in v2_s110:
        if v1_s110 not in v0_s110 and v1_s110 in v3_s110:
            v0_s110.append(v1_s110)
    return cfg

def step_9(cfg):
    v0_s9 = []
    for v1_s9 in v2_s9:
        if v1_s9 in v3_s9 and v1_s9 not in v0_s9:
            v0_s9.append(v1_s9)
    return cfg

def step_53(cfg):
    v0_s53 = []
    for v1_s53 in v2_s53:
        if v1_s53 in v3_s53 and v1_s53 not in v0_s53:
            v0_s53 += [v1_s53]
    return cfg

def step_97(cfg):
    v0_s97 = []
    for v1_s97 in v2_s97:
        if v1_s97 in v3_s97 and v1_s97 not in v0_s97:
            v0_s97 = v0_s97 + [v1_s97]
    return cfg

def step_141(cfg):
    v0_s141 = []
    for v1_s141 in v2_s141:
        if v1_s141 in v3_s141 and v1_s141 not in v0_s141:
            v0_s141.append(v1_s141)
    return cfg

def step_40(cfg):
    v0_s40 = []
    for v1_s40 in v2_s40:
        if v1_s40 not in v0_s40 and v1_s40 in v3_s40:
            v0_s40.append(v1_s40)
    return cfg

def step_84(cfg):
    v0_s84 = []
    for v1_s84 in range(len(v2_s84)):
        if v2_s84[v1_s84] in v3_s84 and v2_s84[v1_s84] not in v0_s84:
            v0_s84.append(v2_s84[v1_s84])
    return cfg

def step_128(cfg):
    v0_s128 = []
    for v1_s128 in v2_s128:
        if v1_s128 in v3_s128 and v1_s128 not in v0_s128:
            v0_s128 += [v1_s128]
    return cfg

def step_27(cfg):
    v0_s27 = []
    for v1_s27 in v2_s27:
        if v1_s27 in v3_s27 and v1_s27 not in v0_s27:
            v0_s27 = v0_s27 + [v1_s27]
    return cfg
