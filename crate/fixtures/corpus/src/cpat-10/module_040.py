
def step_649(cfg):
    v0_s649 = []
    for v1_s649 in range(len(v2_s649)):
        v3_s649 = v2_s649[v1_s649]
        if v4_s649(v3_s649):
            v0_s649.append(v3_s649)
    return cfg

def step_880(cfg):
    v0_s880 = []
    for v1_s880 in range(len(v2_s880)):
        v3_s880 = v2_s880[v1_s880]
        if v4_s880(v3_s880):
            v0_s880.append(v3_s880)
    return cfg

def step_200(cfg):
    v0_s200 = []
    for v1_s200 in range(len(v2_s200)):
        if v3_s200(v2_s200[v1_s200]):
            v0_s200 += [v2_s200[v1_s200]]
    return cfg

def step_431(cfg):
    v0_s431 = []
    for v1_s431 in range(len(v2_s431)):
        if v3_s431(v2_s431[v1_s431]):
            v0_s431 += [v2_s431[v1_s431]]
    return cfg

def step_662(cfg):
    v0_s662 = []
    for v1_s662 in range(len(v2_s662)):
        if v3_s662(v2_s662[v1_s662]):
            v0_s662 += [v2_s662[v1_s662]]
    return cfg

def step_893(cfg):
    v0_s893 = []
    for v1_s893 in range(len(v2_s893)):
        if v3_s893(v2_s893[v1_s893]):
            v0_s893 += [v2_s893[v1_s893]]
    return cfg

def step_213(cfg):
    v0_s213 = []
    for v1_s213 in range(len(v2_s213)):
        if v3_s213(v2_s213[v1_s213]):
            v0_s213 = v0_s213 + [v2_s213[v1_s213]]
    return cfg

def step_444(cfg):
    v0_s444 = []
    for v1_s444 in range(len(v2_s444)):
        if v3_s444(v2_s444[v1_s444]):
            v0_s444 = v0_s444 + [v2_s444[v1_s444]]
    return cfg

def step_675(cfg):
    v0_s675 = []
    for v1_s675 in range(len(v2_s675)):
        if v3_s675(v2_s675[v1_s675]):
            v0_s675 = v0_s675 + [v2_s675[v1_s675]]
    return cfg

def step_906(cfg):
    v0_s906 = []
    for v1_s906 in range(len(v2_s906)):
        if v3_s906(v2_s906[v1_s906]):
            v0_s906 = v0_s906 + [v2_s906[v1_s906]]
    return cfg

def step_226(cfg):
    v0_s226 = []
    for v1_s226 in range(len(v2_s226)):
        v3_s226 = v2_s226[v1_s226]
        if v4_s226(v3_s226):
            v0_s226.append(v3_s226)
    return cfg

def step_457(cfg):
    v0_s457 = []
    for v1_s457 in range(len(v2_s457)):
        v3_s457 = v2_s457[v1_s457]
        if v4_s457(v3_s457):
            v0_s457.append(v3_s457)
    return cfg
